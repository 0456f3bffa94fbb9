#pragma once

#include <cstdint>
#include <vector>

#include "nsc/pool.hpp"
#include "nsc/rng.hpp"

namespace nsc {

/// A fully enumerable instance of the noisy shuffling channel: K codewords
/// (each an m-by-l binary pool, chosen uniformly), crossover p. The joint
/// outcome space codewords x shuffles x error patterns must stay small
/// enough to walk exhaustively.
struct TinyInstance {
  std::vector<Pool> codebook;
  double p = 0.0;

  std::size_t m() const { return codebook.front().m(); }
  std::size_t l() const { return codebook.front().l(); }

  std::uint64_t outcome_count() const;  // K * m! * 2^(m*l)
  void validate() const;  // throws, message carries the size estimate
};

/// K distinct random codewords.
TinyInstance random_tiny_instance(std::size_t m, std::size_t l, std::size_t k,
                                  double p, Rng& rng);

/// Everything the exhaustive walk of a tiny instance yields. All entropies
/// in bits. The b1/b2 right-hand sides come in the pre-Jensen form (with
/// E[|T| log|T|] and E[phi(|T|)] inside the expectation) and the post-Jensen
/// form the asymptotic argument actually quotes; both must dominate their
/// left-hand side.
struct BoundReport {
  std::size_t m = 0, l = 0, codebook_size = 0;
  double p = 0, alpha = 0, delta = 0;

  double h_y = 0;            // H(Y^ML)
  double h_y_given_x = 0;    // H(Y^ML | X^ML)
  double i_xy = 0;           // I(X; Y)
  double h_x_given_y = 0;    // H(X | Y), exact Fano residual
  double h_s_given_xy = 0;   // H(S^M | X^ML, Y^ML)
  double h_szy_given_x = 0;  // H(S, Z, Y | X), enumerated
  double chain_rule_value = 0;  // log2(M!) + ML*H(p)
  double eps_fano = 0;       // H(X|Y) / (ML)

  double e_t = 0;       // E|T|
  double e_tlogt = 0;   // E[|T| log2 |T|]
  double chernoff_sum = 0;  // sum_i Pr(E_i), exact binomial tails

  double b1_rhs = 0;         // M + E[L|T| + (M-|T|)(log|T| + L H(alpha))]
  double b1_rhs_jensen = 0;  // M + L E|T| + (M-E|T|)(log E|T| + L H(alpha))
  double b2_rhs = 0;         // M + logM * sum Pr(E_i) + M logM - E[|T| log|T|]
  double b2_rhs_jensen = 0;  // ... - E|T| log E|T| instead
  double slack_b1 = 0, slack_b1_jensen = 0;
  double slack_b2 = 0, slack_b2_jensen = 0;
  bool bounds_hold = false;
};

/// Exact joint-distribution walk. alpha defines the clustering set T (same
/// convention as cluster_set, exact mode); delta defines the per-string
/// large-error events E_i. The parallel path chunks the output space and
/// reduces in chunk order, so its sums match the serial path bit for bit.
BoundReport oracle_entropies(const TinyInstance& inst, double alpha,
                             double delta, bool parallel = true);

/// oracle_entropies plus the precondition gate of the finite-M bound check:
/// 2p < alpha <= 0.5 and p < delta <= alpha/2. Fills bounds_hold.
BoundReport check_bounds(const TinyInstance& inst, double alpha, double delta);

/// f(x) = x beta (1 - H(alpha)) log2 M + M log2 x - 2 x log2 x
double f_curve(double x, std::size_t m, double alpha, double beta);

/// 0.5 * M^(gamma/2) with gamma = beta (1 - H(alpha)): below this point the
/// dropped-term bound certifies f' > 0.
double f_threshold(std::size_t m, double alpha, double beta);

/// Chernoff bound 2^(-L D(delta||p)) next to the exact binomial tail it
/// dominates. Requires delta > p and p in (0, 1).
struct ChernoffProb {
  double bound;
  double exact;
};
ChernoffProb chernoff_error_prob(unsigned l, double delta, double p);

}  // namespace nsc
