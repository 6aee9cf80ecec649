#pragma once

#include <cstdint>

#include "dcreg/normal.hpp"

namespace dcreg {

// SplitMix64 finalizer. Bijective on 64-bit integers.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based random stream. Draw k of a stream is a pure function of
// (key, k), so per-unit draws are reproducible independent of evaluation
// order and thread count. Derive disjoint child streams with child().
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : key_(key) {}

  RandomStream child(std::uint64_t salt) const {
    return RandomStream(mix64(key_ ^ mix64(salt + 0x5851f42d4c957f2dull)));
  }

  std::uint64_t key() const { return key_; }

  std::uint64_t bits_at(std::uint64_t index) const { return mix64(key_ ^ mix64(index)); }

  // Uniform on the open interval (0, 1); never returns an endpoint, so
  // quantile transforms stay finite.
  double uniform_at(std::uint64_t index) const {
    return (static_cast<double>(bits_at(index) >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal_at(std::uint64_t index) const { return normal_quantile(uniform_at(index)); }

  // Sequential convenience; advances an internal counter.
  double uniform() { return uniform_at(counter_++); }
  double normal() { return normal_at(counter_++); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Chained key derivation for composite seeds, e.g. (master, family, n, rep).
inline std::uint64_t derive_key(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x853c49e6748fea9bull;
  for (std::uint64_t p : parts) h = mix64(h ^ mix64(p));
  return h;
}

}  // namespace dcreg
