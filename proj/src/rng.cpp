#include "arena/rng.hpp"

namespace arena {

namespace {

inline uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

uint64_t RngStream::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t RngStream::uniform(uint64_t bound) {
  // Reject the tail of the 2^64 range that would bias low residues.
  uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

int RngStream::uniform_int(int lo, int hi) {
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  return lo + static_cast<int>(uniform(span));
}

double RngStream::uniform_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RngStream derive_rng(uint64_t base_seed, std::span<const uint64_t> labels) {
  uint64_t h = splitmix64(base_seed ^ 0xa02b5c7e1d3f9641ULL);
  for (uint64_t label : labels) {
    h = splitmix64(h ^ splitmix64(label ^ 0x6a09e667f3bcc909ULL));
  }
  return RngStream(h);
}

RngStream derive_rng(uint64_t base_seed, std::initializer_list<uint64_t> labels) {
  return derive_rng(base_seed, std::span<const uint64_t>(labels.begin(), labels.size()));
}

uint64_t mix_seed(uint64_t a, uint64_t b) {
  return splitmix64(a ^ splitmix64(b ^ 0x9e3779b97f4a7c15ULL));
}

}  // namespace arena
