#include "nsc/gf.hpp"

#include <stdexcept>

namespace nsc {

namespace {

// primitive polynomials, bit i = coefficient of x^i
constexpr std::uint32_t kPrimPoly[17] = {
    0,      0,      0x7,    0xB,    0x13,   0x25,   0x43,  0x89, 0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

}  // namespace

GF2m::GF2m(unsigned w) : w_(w) {
  if (w < 2 || w > 16) throw std::invalid_argument("GF2m: w must be in [2,16]");
  n_ = (1U << w) - 1;
  exp_.assign(2 * n_, 0);
  log_.assign(n_ + 1, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    exp_[i] = x;
    exp_[i + n_] = x;
    log_[x] = i;
    x <<= 1;
    if (x > n_) x ^= kPrimPoly[w];
  }
  if (x != 1) throw std::logic_error("GF2m: polynomial is not primitive");
}

std::uint32_t GF2m::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("GF2m: division by zero");
  return exp_[n_ - log_[a]];
}

std::uint32_t GF2m::div(std::uint32_t a, std::uint32_t b) const {
  if (b == 0) throw std::domain_error("GF2m: division by zero");
  if (a == 0) return 0;
  return exp_[log_[a] + n_ - log_[b]];
}

std::uint32_t GF2m::alpha_pow(long long e) const {
  long long r = e % static_cast<long long>(n_);
  if (r < 0) r += n_;
  return exp_[static_cast<std::uint32_t>(r)];
}

std::uint32_t GF2m::log(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("GF2m: log of zero");
  return log_[a];
}

}  // namespace nsc
