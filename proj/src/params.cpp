#include "nsc/params.hpp"

#include <cmath>
#include <stdexcept>

namespace nsc {

std::size_t ChannelParams::l() const {
  return static_cast<std::size_t>(
      std::floor(beta * std::log2(static_cast<double>(m)) + 0.5));
}

void ChannelParams::validate() const {
  if (m < 2) throw std::invalid_argument("ChannelParams: m must be >= 2");
  if (!(beta > 0.0)) throw std::invalid_argument("ChannelParams: beta must be positive");
  if (q < 2) throw std::invalid_argument("ChannelParams: q must be >= 2");
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::invalid_argument("ChannelParams: p must be in [0, 0.5]");
  }
  if (l() < 1) throw std::invalid_argument("ChannelParams: derived L must be >= 1");
  if (c && !(*c > 0.0)) {
    throw std::invalid_argument("ChannelParams: coverage c must be positive");
  }
}

ChannelParams ChannelParams::make(std::size_t m, double beta, double p,
                                  unsigned q, std::optional<double> c) {
  ChannelParams params{m, beta, q, p, c};
  params.validate();
  return params;
}

}  // namespace nsc
