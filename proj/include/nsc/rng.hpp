#pragma once

#include <cstdint>

namespace nsc {

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for a derived stream (per trial, per grid cell, ...). Streams from
/// the same master are independent and order-insensitive.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// xoshiro256++ with splitmix64 seeding. All sampling helpers are hand
/// rolled so a given seed reproduces the same stream on every platform this
/// library is built for.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform in [0,1) with 53-bit resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), unbiased (rejection sampling). n > 0.
  std::uint64_t below(std::uint64_t n);

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::uint64_t s_[4];
};

}  // namespace nsc
