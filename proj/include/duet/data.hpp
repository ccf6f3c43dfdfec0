#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace duet {

// Ordered class identifiers. The ordering is part of a dataset's identity:
// ordinal agreement statistics weight disagreements by index distance.
class LabelSpace {
 public:
  LabelSpace() = default;
  explicit LabelSpace(std::vector<std::string> classes);

  int k() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::string>& classes() const { return classes_; }
  const std::string& name(int index) const;
  int index_of(std::string_view name) const;  // -1 if unknown
  bool valid_index(int index) const { return index >= 0 && index < k(); }

  friend bool operator==(const LabelSpace&, const LabelSpace&) = default;

 private:
  std::vector<std::string> classes_;
};

struct Annotation {
  std::string annotator_id;
  int label = 0;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct AnnotationSet {
  std::vector<Annotation> votes;

  int n() const { return static_cast<int>(votes.size()); }
  std::vector<int> class_counts(int k) const;

  friend bool operator==(const AnnotationSet&, const AnnotationSet&) = default;
};

struct Sample {
  std::string id;
  std::vector<double> features;
  std::optional<int> gold_label;     // golden-standard truth, evaluation only
  std::optional<int> working_label;  // label the training paths may read
  AnnotationSet annotations;

  // A sample can enter a training path only if it carries a label source.
  bool labeled() const { return working_label.has_value() || annotations.n() > 0; }

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct Dataset {
  LabelSpace labels;
  int feature_dim = 0;
  std::vector<Sample> samples;

  std::size_t size() const { return samples.size(); }
  const Sample* find(std::string_view id) const;
  Sample* find(std::string_view id);
  std::vector<std::size_t> labeled_indices() const;
  void init_working_from_gold();

  // Checks structural invariants; throws SchemaError on violation.
  void validate() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

}  // namespace duet
