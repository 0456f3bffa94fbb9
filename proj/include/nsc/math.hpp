#pragma once

#include <cstdint>

namespace nsc {

/// Binary entropy H(p) in bits, with 0*log(0) taken as 0.
/// Throws std::domain_error for p outside [0,1].
double binary_entropy(double p);

/// Binary KL divergence D(delta || p) in bits. A reference probability of
/// exactly 0 or 1 gives +inf unless delta matches it.
double kl_binary(double delta, double p);

/// log2(n!)
double log2_factorial(std::uint64_t n);

/// Exact upper tail Pr(Bin(n, p) >= kmin).
double binomial_tail(unsigned n, double p, unsigned kmin);

struct BallLogSize {
  double exact;  // log2 of sum_{k <= floor(alpha*L)} C(L,k) (q-1)^k
  double bound;  // L * H(alpha), the binary ball bound (valid for alpha <= 1/2)
};

/// Size of a Hamming ball of radius alpha*L around a fixed center, as log2,
/// together with the entropy bound it is dominated by in the binary case.
BallLogSize hamming_ball_log_size(unsigned length, double alpha, unsigned q = 2);

/// Smallest integer distance d with d >= alpha*L. Distances are integers, so
/// "d_H >= alpha*L" is implemented as d_H >= ceil(alpha*L).
unsigned distance_threshold(double alpha, unsigned length);

}  // namespace nsc
