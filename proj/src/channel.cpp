#include "nsc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nsc/math.hpp"

namespace nsc {

CorruptResult corrupt_symmetric(const Pool& in, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("corrupt_symmetric: p must be in [0,1]");
  }
  const unsigned q = in.q();
  CorruptResult res{in, Pool(in.m(), in.l(), q)};
  if (p == 0.0) return res;
  auto& out = res.output.data();
  auto& err = res.errors.data();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (rng.bernoulli(p)) {
      const auto offset = static_cast<Symbol>(1 + rng.below(q - 1));
      err[i] = offset;
      out[i] = static_cast<Symbol>((out[i] + offset) % q);
    }
  }
  return res;
}

ShuffleResult shuffle_pool(const Pool& in, Rng& rng) {
  const std::size_t m = in.m();
  std::vector<std::uint32_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0U);
  for (std::size_t i = m - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.below(i + 1)]);
  }
  Pool out(m, in.l(), in.q());
  for (std::size_t k = 0; k < m; ++k) {
    auto src = in.row(perm[k]);
    std::copy(src.begin(), src.end(), out.row(k).begin());
  }
  return {std::move(out), std::move(perm)};
}

SampleResult sample_pool(const Pool& in, double c, Rng& rng) {
  if (!(c > 0.0)) throw std::invalid_argument("sample_pool: c must be positive");
  const auto n = static_cast<std::size_t>(
      std::floor(c * static_cast<double>(in.m()) + 0.5));
  if (n == 0) throw std::invalid_argument("sample_pool: round(c*M) must be >= 1");
  std::vector<std::uint32_t> indices(n);
  Pool out(n, in.l(), in.q());
  for (std::size_t k = 0; k < n; ++k) {
    const auto idx = static_cast<std::uint32_t>(rng.below(in.m()));
    indices[k] = idx;
    auto src = in.row(idx);
    std::copy(src.begin(), src.end(), out.row(k).begin());
  }
  return {std::move(out), std::move(indices)};
}

namespace {

bool rows_are_permutations(const std::vector<std::vector<double>>& rows) {
  auto sorted = rows.front();
  std::sort(sorted.begin(), sorted.end());
  for (const auto& r : rows) {
    auto s = r;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (std::abs(s[i] - sorted[i]) > 1e-12) return false;
    }
  }
  return true;
}

}  // namespace

DmcSpec::DmcSpec(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw std::invalid_argument("DmcSpec: empty transition matrix");
  }
  const std::size_t cols = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols) throw std::invalid_argument("DmcSpec: ragged matrix");
    double sum = 0.0;
    for (double v : r) {
      if (v < 0.0) throw std::invalid_argument("DmcSpec: negative probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("DmcSpec: rows must sum to 1");
    }
  }
  // column permutation check needs the transpose
  std::vector<std::vector<double>> cols_t(cols, std::vector<double>(rows_.size()));
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    for (std::size_t y = 0; y < cols; ++y) cols_t[y][x] = rows_[x][y];
  }
  symmetric_ = rows_are_permutations(rows_) && rows_are_permutations(cols_t);
}

double DmcSpec::row_entropy() const {
  double h = 0.0;
  for (double v : rows_.front()) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

DmcSpec DmcSpec::bsc(double p) {
  return DmcSpec({{1.0 - p, p}, {p, 1.0 - p}});
}

DmcSpec DmcSpec::q_symmetric(unsigned q, double p) {
  if (q < 2) throw std::invalid_argument("q_symmetric: q must be >= 2");
  std::vector<std::vector<double>> rows(q, std::vector<double>(q, p / (q - 1)));
  for (unsigned x = 0; x < q; ++x) rows[x][x] = 1.0 - p;
  return DmcSpec(std::move(rows));
}

TransmitResult transmit(const Pool& in, const ChannelParams& params, Rng& rng) {
  auto corrupted = corrupt_symmetric(in, params.p, rng);
  auto shuffled = shuffle_pool(corrupted.output, rng);
  TransmitResult res;
  res.trace.errors = std::move(corrupted.errors);
  res.trace.shuffle = std::move(shuffled.perm);
  if (params.c) {
    auto sampled = sample_pool(shuffled.output, *params.c, rng);
    res.output = std::move(sampled.output);
    res.trace.sampled_indices = std::move(sampled.indices);
  } else {
    res.output = std::move(shuffled.output);
  }
  return res;
}

DmcResult corrupt_dmc(const Pool& in, const DmcSpec& dmc, Rng& rng) {
  if (in.q() != dmc.input_alphabet()) {
    throw std::invalid_argument("corrupt_dmc: pool alphabet does not match channel");
  }
  const auto out_q = static_cast<unsigned>(dmc.output_alphabet());
  Pool out(in.m(), in.l(), out_q);
  for (std::size_t i = 0; i < in.m(); ++i) {
    for (std::size_t j = 0; j < in.l(); ++j) {
      const auto& row = dmc.row(in(i, j));
      const double u = rng.unit();
      double acc = 0.0;
      Symbol y = static_cast<Symbol>(out_q - 1);
      for (std::size_t v = 0; v < row.size(); ++v) {
        acc += row[v];
        if (u < acc) {
          y = static_cast<Symbol>(v);
          break;
        }
      }
      out(i, j) = y;
    }
  }
  return {out, out};
}

}  // namespace nsc
