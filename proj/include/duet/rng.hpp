#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace duet {

// Seeded generator with named child streams. Every stochastic operation takes
// one of these explicitly, so a fixed root seed reproduces every downstream
// draw. A child stream depends only on (parent seed, name), never on how many
// values the parent has produced.
//
// Uniform and normal variates are generated with fixed algorithms on top of
// mt19937_64 rather than std distributions, whose output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi);

  // Uniform integer on [0, n); n must be positive. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t n);

  // Standard normal via Box-Muller; consumes two uniforms, keeps no spare.
  double normal();
  double normal(double mean, double stddev);

  bool bernoulli(double p);

  // Draw from a categorical distribution given row weights summing to ~1.
  int categorical(const std::vector<double>& probs);

  Rng child(std::string_view name) const;

  template <typename T>
  void shuffle(std::vector<T>& items) {
    if (items.size() < 2) return;
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  std::uint64_t seed() const { return seed_; }

  // Engine state; restore() round-trips exactly.
  std::string state() const;
  void restore(const std::string& state);

 private:
  std::uint64_t seed_ = 0;
  std::mt19937_64 engine_;
};

// FNV-1a, used to derive per-name and per-id stream seeds.
std::uint64_t hash64(std::string_view s);

// splitmix64 finalizer; decorrelates related seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace duet
