#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace arena {

// Deterministic counter-based stream (splitmix64 core).  All sampling
// helpers are written out by hand so that draws are identical across
// platforms and standard libraries; std::uniform_int_distribution and
// friends are implementation-defined and must not be used anywhere a
// reproducible sequence is required.
class RngStream {
 public:
  RngStream() : state_(0) {}
  explicit RngStream(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();

  // Uniform in [0, bound), bound > 0.  Rejection sampling, no modulo bias.
  uint64_t uniform(uint64_t bound);

  // Uniform integer in [lo, hi], inclusive; requires lo <= hi.
  int uniform_int(int lo, int hi);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_unit();

  bool bernoulli(double p) { return uniform_unit() < p; }

  // Fisher-Yates; index draws come from this stream.
  template <class Container>
  void shuffle(Container& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[uniform(v.size())];
  }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

// Derives an independent child stream from a base seed and a label path.
// Distinct label paths give decorrelated streams; the same path always
// gives the same stream.  Used to keep environment randomness, fallback
// draws and per-agent randomness from perturbing one another.
RngStream derive_rng(uint64_t base_seed, std::span<const uint64_t> labels);
RngStream derive_rng(uint64_t base_seed, std::initializer_list<uint64_t> labels);

// Stable 64-bit mix of two values; used for match seed derivation.
uint64_t mix_seed(uint64_t a, uint64_t b);

}  // namespace arena
