#include "nsc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nsc/math.hpp"

namespace nsc {

namespace {

constexpr std::uint64_t kOutcomeCap = 20'000'000;
constexpr std::size_t kChunk = 4096;

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint32_t pack_pool(const Pool& pool) {
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < pool.m(); ++k) {
    for (std::size_t j = 0; j < pool.l(); ++j) {
      if (pool(k, j)) mask |= 1U << (k * pool.l() + j);
    }
  }
  return mask;
}

// lexicographic order on the sorted index lists two same-size masks encode
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// |T| for a packed output pool: largest subset with pairwise distance >=
// threshold, lexicographically smallest among the maximum ones (matches
// cluster_set in exact mode)
unsigned cluster_size(std::uint32_t y, std::size_t m, std::size_t l,
                      unsigned threshold) {
  const std::uint32_t lmask = (1U << l) - 1U;
  std::uint32_t rows[4];
  for (std::size_t k = 0; k < m; ++k) rows[k] = y >> (k * l) & lmask;
  unsigned best_size = 0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t sub = 1; sub < (1U << m); ++sub) {
    const auto size = static_cast<unsigned>(std::popcount(sub));
    if (size < best_size) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < m; ++i) {
      if (!(sub >> i & 1U)) continue;
      for (std::size_t j = i + 1; ok && j < m; ++j) {
        if (!(sub >> j & 1U)) continue;
        ok = static_cast<unsigned>(std::popcount(rows[i] ^ rows[j])) >= threshold;
      }
    }
    if (!ok) continue;
    if (size > best_size || (size == best_size && mask_lex_less(sub, best_mask))) {
      best_size = size;
      best_mask = sub;
    }
  }
  return best_size;
}

struct Accum {
  double h_y = 0, h_y_given_x = 0, h_s = 0, h_x_given_y = 0;
  double e_t = 0, e_tlogt = 0, b1_phi = 0;

  void operator+=(const Accum& o) {
    h_y += o.h_y;
    h_y_given_x += o.h_y_given_x;
    h_s += o.h_s;
    h_x_given_y += o.h_x_given_y;
    e_t += o.e_t;
    e_tlogt += o.e_tlogt;
    b1_phi += o.b1_phi;
  }
};

}  // namespace

std::uint64_t TinyInstance::outcome_count() const {
  const std::uint64_t ml = static_cast<std::uint64_t>(m()) * l();
  return static_cast<std::uint64_t>(codebook.size()) * factorial(m()) *
         (std::uint64_t{1} << ml);
}

void TinyInstance::validate() const {
  if (codebook.empty()) throw std::invalid_argument("TinyInstance: empty codebook");
  const auto& first = codebook.front();
  if (first.q() != 2) throw std::invalid_argument("TinyInstance: binary pools only");
  if (first.m() < 1 || first.m() > 4 || first.l() < 1 || first.l() > 5) {
    throw std::invalid_argument("TinyInstance: need m <= 4 and l <= 5");
  }
  for (const auto& cw : codebook) {
    if (cw.m() != first.m() || cw.l() != first.l() || cw.q() != 2) {
      throw std::invalid_argument("TinyInstance: codewords must share the pool shape");
    }
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("TinyInstance: p must be in [0,1]");
  }
  if (outcome_count() > kOutcomeCap) {
    throw std::invalid_argument(
        "TinyInstance: " + std::to_string(outcome_count()) +
        " joint outcomes exceed the enumeration cap of " +
        std::to_string(kOutcomeCap));
  }
}

TinyInstance random_tiny_instance(std::size_t m, std::size_t l, std::size_t k,
                                  double p, Rng& rng) {
  if (m < 2 || m > 4 || l < 1 || l > 5) {
    throw std::invalid_argument("random_tiny_instance: need 2 <= m <= 4, l <= 5");
  }
  const std::size_t ml = m * l;
  if (k == 0 || (ml < 63 && k > (std::uint64_t{1} << ml))) {
    throw std::invalid_argument("random_tiny_instance: codebook too large");
  }
  TinyInstance inst;
  inst.p = p;
  std::vector<std::uint32_t> seen;
  while (inst.codebook.size() < k) {
    const auto mask = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << ml));
    if (std::find(seen.begin(), seen.end(), mask) != seen.end()) continue;
    seen.push_back(mask);
    Pool cw(m, l, 2);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        cw(i, j) = static_cast<Symbol>(mask >> (i * l + j) & 1U);
      }
    }
    inst.codebook.push_back(std::move(cw));
  }
  inst.validate();
  return inst;
}

BoundReport oracle_entropies(const TinyInstance& inst, double alpha,
                             double delta, bool parallel) {
  inst.validate();
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("oracle_entropies: alpha must be in (0,1]");
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("oracle_entropies: delta must be in (0,1]");
  }
  const std::size_t m = inst.m();
  const std::size_t l = inst.l();
  const std::size_t ml = m * l;
  const std::size_t k_cw = inst.codebook.size();
  const double p = inst.p;

  // permutation-expanded codeword masks
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  const std::size_t n_perm = perms.size();

  const std::uint32_t lmask = (1U << l) - 1U;
  std::vector<std::uint32_t> px(k_cw * n_perm);
  for (std::size_t xi = 0; xi < k_cw; ++xi) {
    const std::uint32_t base = pack_pool(inst.codebook[xi]);
    for (std::size_t si = 0; si < n_perm; ++si) {
      std::uint32_t mask = 0;
      for (std::size_t k = 0; k < m; ++k) {
        mask |= (base >> (perms[si][k] * l) & lmask) << (k * l);
      }
      px[xi * n_perm + si] = mask;
    }
  }

  // weight-indexed error probabilities and their plogp companions
  std::vector<double> pw(ml + 1), pwl(ml + 1);
  for (std::size_t w = 0; w <= ml; ++w) {
    pw[w] = std::pow(p, static_cast<double>(w)) *
            std::pow(1.0 - p, static_cast<double>(ml - w));
    pwl[w] = pw[w] > 0.0 ? pw[w] * std::log2(pw[w]) : 0.0;
  }

  const unsigned threshold = distance_threshold(alpha, static_cast<unsigned>(l));
  const double norm = static_cast<double>(k_cw) * static_cast<double>(n_perm);
  const double l_h_alpha = static_cast<double>(l) * binary_entropy(alpha);

  const std::uint64_t y_count = std::uint64_t{1} << ml;
  const std::size_t n_chunks =
      static_cast<std::size_t>((y_count + kChunk - 1) / kChunk);
  std::vector<Accum> chunks(n_chunks);

  // identical chunking and in-chunk order on both paths keeps the reduction
  // deterministic and thread-count independent
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(n_chunks); ++ci) {
    Accum acc;
    const std::uint64_t y_begin = static_cast<std::uint64_t>(ci) * kChunk;
    const std::uint64_t y_end = std::min<std::uint64_t>(y_begin + kChunk, y_count);
    for (std::uint64_t y = y_begin; y < y_end; ++y) {
      double v_sum = 0.0, vlv_sum = 0.0;
      for (std::size_t xi = 0; xi < k_cw; ++xi) {
        double z = 0.0, qlq = 0.0;
        const std::uint32_t* row = &px[xi * n_perm];
        for (std::size_t si = 0; si < n_perm; ++si) {
          const auto w = static_cast<std::size_t>(
              std::popcount(static_cast<std::uint32_t>(y) ^ row[si]));
          z += pw[w];
          qlq += pwl[w];
        }
        if (z > 0.0) {
          const double zl = z * std::log2(z);
          acc.h_s += (zl - qlq) / norm;
          acc.h_y_given_x -= (z / static_cast<double>(n_perm)) *
                             std::log2(z / static_cast<double>(n_perm)) /
                             static_cast<double>(k_cw);
          v_sum += z;
          vlv_sum += zl;
        }
      }
      if (v_sum <= 0.0) continue;
      const double py = v_sum / norm;
      acc.h_y -= py * std::log2(py);
      acc.h_x_given_y += (v_sum * std::log2(v_sum) - vlv_sum) / norm;
      const unsigned t =
          cluster_size(static_cast<std::uint32_t>(y), m, l, threshold);
      const double td = t;
      acc.e_t += py * td;
      acc.e_tlogt += py * td * std::log2(td);
      acc.b1_phi += py * (static_cast<double>(l) * td +
                          (static_cast<double>(m) - td) * (std::log2(td) + l_h_alpha));
    }
    chunks[ci] = acc;
  }
  (void)parallel;

  Accum total;
  for (const auto& acc : chunks) total += acc;

  BoundReport rep;
  rep.m = m;
  rep.l = l;
  rep.codebook_size = k_cw;
  rep.p = p;
  rep.alpha = alpha;
  rep.delta = delta;
  rep.h_y = total.h_y;
  rep.h_y_given_x = total.h_y_given_x;
  rep.i_xy = total.h_y - total.h_y_given_x;
  rep.h_x_given_y = total.h_x_given_y;
  rep.h_s_given_xy = total.h_s;
  rep.e_t = total.e_t;
  rep.e_tlogt = total.e_tlogt;

  // H(S,Z,Y|X) = H(S,Z|X): walk the (s, z) space grouped by error weight
  double hszy = 0.0;
  double comb = 1.0;  // C(ml, w)
  for (std::size_t w = 0; w <= ml; ++w) {
    const double u = pw[w] / static_cast<double>(n_perm);
    if (u > 0.0) {
      hszy -= static_cast<double>(n_perm) * comb * u * std::log2(u);
    }
    comb *= static_cast<double>(ml - w) / static_cast<double>(w + 1);
  }
  rep.h_szy_given_x = hszy;
  rep.chain_rule_value =
      log2_factorial(m) + static_cast<double>(ml) * binary_entropy(p);
  rep.eps_fano = rep.h_x_given_y / static_cast<double>(ml);

  const auto kmin = static_cast<unsigned>(
      std::ceil(delta * static_cast<double>(l) - 1e-9));
  rep.chernoff_sum =
      static_cast<double>(m) * binomial_tail(static_cast<unsigned>(l), p, kmin);

  const double md = static_cast<double>(m);
  const double log_m = std::log2(md);
  rep.b1_rhs = md + total.b1_phi;
  rep.b1_rhs_jensen =
      md + static_cast<double>(l) * rep.e_t +
      (md - rep.e_t) * (std::log2(rep.e_t) + l_h_alpha);
  rep.b2_rhs = md + log_m * rep.chernoff_sum + md * log_m - rep.e_tlogt;
  rep.b2_rhs_jensen =
      md + log_m * rep.chernoff_sum + md * log_m - rep.e_t * std::log2(rep.e_t);
  rep.slack_b1 = rep.b1_rhs - rep.h_y;
  rep.slack_b1_jensen = rep.b1_rhs_jensen - rep.h_y;
  rep.slack_b2 = rep.b2_rhs - rep.h_s_given_xy;
  rep.slack_b2_jensen = rep.b2_rhs_jensen - rep.h_s_given_xy;
  rep.bounds_hold = rep.slack_b1 >= -1e-9 && rep.slack_b1_jensen >= -1e-9 &&
                    rep.slack_b2 >= -1e-9 && rep.slack_b2_jensen >= -1e-9;
  return rep;
}

BoundReport check_bounds(const TinyInstance& inst, double alpha, double delta) {
  if (!(alpha > 2.0 * inst.p && alpha <= 0.5)) {
    throw std::invalid_argument("check_bounds: need 2p < alpha <= 0.5");
  }
  if (!(delta > inst.p && delta <= alpha / 2.0 + 1e-12)) {
    throw std::invalid_argument("check_bounds: need p < delta <= alpha/2");
  }
  return oracle_entropies(inst, alpha, delta);
}

double f_curve(double x, std::size_t m, double alpha, double beta) {
  if (!(x > 0.0)) throw std::domain_error("f_curve: x must be positive");
  const double gamma = beta * (1.0 - binary_entropy(alpha));
  return x * gamma * std::log2(static_cast<double>(m)) +
         static_cast<double>(m) * std::log2(x) - 2.0 * x * std::log2(x);
}

double f_threshold(std::size_t m, double alpha, double beta) {
  const double gamma = beta * (1.0 - binary_entropy(alpha));
  return 0.5 * std::pow(static_cast<double>(m), gamma / 2.0);
}

ChernoffProb chernoff_error_prob(unsigned l, double delta, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("chernoff_error_prob: p must be in (0,1)");
  }
  if (!(delta > p && delta <= 1.0)) {
    throw std::domain_error("chernoff_error_prob: delta must be in (p, 1]");
  }
  const double bound =
      std::exp2(-static_cast<double>(l) * kl_binary(delta, p));
  const auto kmin = static_cast<unsigned>(
      std::ceil(delta * static_cast<double>(l) - 1e-9));
  return {bound, binomial_tail(l, p, kmin)};
}

}  // namespace nsc
