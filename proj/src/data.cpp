#include "duet/data.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "duet/error.hpp"

namespace duet {

LabelSpace::LabelSpace(std::vector<std::string> classes) : classes_(std::move(classes)) {
  if (classes_.size() < 2) throw SchemaError("label space needs at least 2 classes");
  std::set<std::string> seen(classes_.begin(), classes_.end());
  if (seen.size() != classes_.size()) throw SchemaError("duplicate class identifiers");
}

const std::string& LabelSpace::name(int index) const {
  if (!valid_index(index)) throw ArgumentError("class index out of range");
  return classes_[static_cast<std::size_t>(index)];
}

int LabelSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> AnnotationSet::class_counts(int k) const {
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  for (const auto& v : votes) {
    if (v.label < 0 || v.label >= k) throw SchemaError("vote label out of range");
    ++counts[static_cast<std::size_t>(v.label)];
  }
  return counts;
}

const Sample* Dataset::find(std::string_view id) const {
  for (const auto& s : samples) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

Sample* Dataset::find(std::string_view id) {
  return const_cast<Sample*>(static_cast<const Dataset*>(this)->find(id));
}

std::vector<std::size_t> Dataset::labeled_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].labeled()) out.push_back(i);
  }
  return out;
}

void Dataset::init_working_from_gold() {
  for (auto& s : samples) {
    if (!s.gold_label) throw StateError("sample '" + s.id + "' has no gold label");
    s.working_label = s.gold_label;
  }
}

void Dataset::validate() const {
  if (labels.k() < 2) throw SchemaError("label space needs at least 2 classes");
  if (feature_dim < 1) throw SchemaError("feature dimension must be positive");
  std::set<std::string> ids;
  for (const auto& s : samples) {
    if (s.id.empty()) throw SchemaError("empty sample id");
    if (!ids.insert(s.id).second) throw SchemaError("duplicate sample id '" + s.id + "'");
    if (static_cast<int>(s.features.size()) != feature_dim)
      throw SchemaError("sample '" + s.id + "' has wrong feature dimension");
    for (double x : s.features) {
      if (!std::isfinite(x)) throw SchemaError("non-finite feature in sample '" + s.id + "'");
    }
    if (s.gold_label && !labels.valid_index(*s.gold_label))
      throw SchemaError("sample '" + s.id + "' gold label out of range");
    if (s.working_label && !labels.valid_index(*s.working_label))
      throw SchemaError("sample '" + s.id + "' working label out of range");
    std::set<std::string> raters;
    for (const auto& v : s.annotations.votes) {
      if (!labels.valid_index(v.label))
        throw SchemaError("sample '" + s.id + "' vote label out of range");
      if (!raters.insert(v.annotator_id).second)
        throw SchemaError("annotator '" + v.annotator_id + "' votes twice on sample '" + s.id +
                          "'");
    }
  }
}

}  // namespace duet
