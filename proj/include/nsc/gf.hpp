#pragma once

#include <cstdint>
#include <vector>

namespace nsc {

/// GF(2^w) arithmetic over log/antilog tables, 2 <= w <= 16.
class GF2m {
 public:
  explicit GF2m(unsigned w);

  unsigned w() const { return w_; }
  std::uint32_t order() const { return n_; }  // number of nonzero elements

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;

  /// alpha^e for the canonical primitive element, e taken mod (2^w - 1);
  /// negative exponents allowed.
  std::uint32_t alpha_pow(long long e) const;

  std::uint32_t log(std::uint32_t a) const;

 private:
  unsigned w_;
  std::uint32_t n_;
  std::vector<std::uint32_t> exp_;  // 2n entries, doubled to skip reductions
  std::vector<std::uint32_t> log_;
};

}  // namespace nsc
