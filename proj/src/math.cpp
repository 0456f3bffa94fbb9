#include "nsc/math.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nsc {

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary_entropy: p must be in [0,1]");
  }
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double kl_binary(double delta, double p) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::domain_error("kl_binary: delta must be in [0,1]");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("kl_binary: p must be in [0,1]");
  }
  const double inf = std::numeric_limits<double>::infinity();
  if (p == 0.0) return delta == 0.0 ? 0.0 : inf;
  if (p == 1.0) return delta == 1.0 ? 0.0 : inf;
  double d = 0.0;
  if (delta > 0.0) d += delta * std::log2(delta / p);
  if (delta < 1.0) d += (1.0 - delta) * std::log2((1.0 - delta) / (1.0 - p));
  return d;
}

double log2_factorial(std::uint64_t n) {
  // exact summation is plenty at the sizes this library deals in
  if (n < 2) return 0.0;
  if (n <= 256) {
    double s = 0.0;
    for (std::uint64_t i = 2; i <= n; ++i) s += std::log2(static_cast<double>(i));
    return s;
  }
  return std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0);
}

double binomial_tail(unsigned n, double p, unsigned kmin) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binomial_tail: p must be in [0,1]");
  }
  if (kmin > n) return 0.0;
  if (p == 0.0) return kmin == 0 ? 1.0 : 0.0;
  if (p == 1.0) return 1.0;
  // term recurrence from k = 0; relative error stays near machine epsilon
  double term = std::pow(1.0 - p, static_cast<double>(n));
  double sum = kmin == 0 ? term : 0.0;
  for (unsigned k = 0; k < n; ++k) {
    term *= static_cast<double>(n - k) / static_cast<double>(k + 1) * p / (1.0 - p);
    if (k + 1 >= kmin) sum += term;
  }
  return sum < 1.0 ? sum : 1.0;
}

BallLogSize hamming_ball_log_size(unsigned length, double alpha, unsigned q) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("hamming_ball_log_size: alpha must be in [0,1]");
  }
  if (q < 2) throw std::domain_error("hamming_ball_log_size: q must be >= 2");
  const auto radius =
      static_cast<unsigned>(std::floor(alpha * length + 1e-9));
  double count = 0.0;
  double term = 1.0;  // C(L,k)(q-1)^k at k
  for (unsigned k = 0;; ++k) {
    if (k <= radius) count += term;
    if (k >= length || k >= radius) break;
    term *= static_cast<double>(length - k) / static_cast<double>(k + 1) *
            static_cast<double>(q - 1);
  }
  return BallLogSize{std::log2(count), length * binary_entropy(alpha)};
}

unsigned distance_threshold(double alpha, unsigned length) {
  return static_cast<unsigned>(std::ceil(alpha * length - 1e-9));
}

}  // namespace nsc
