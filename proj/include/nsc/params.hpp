#pragma once

#include <cstddef>
#include <optional>

namespace nsc {

/// Channel geometry: M strings of length L = round(beta * log2(M)) over a
/// q-ary alphabet, crossover probability p, optional sampling coverage c.
struct ChannelParams {
  std::size_t m = 2;
  double beta = 1.0;
  unsigned q = 2;
  double p = 0.0;
  std::optional<double> c;  // sampling stage active iff set

  /// Derived string length, round-half-up. Always >= 1 after validate().
  std::size_t l() const;

  /// Throws std::invalid_argument when any invariant is violated.
  void validate() const;

  static ChannelParams make(std::size_t m, double beta, double p = 0.0,
                            unsigned q = 2,
                            std::optional<double> c = std::nullopt);
};

}  // namespace nsc
