#include "nsc/codec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

#include "nsc/rng.hpp"
#include "nsc/rs.hpp"

namespace nsc {

namespace {

unsigned popcount32(std::uint32_t v) { return static_cast<unsigned>(std::popcount(v)); }

std::vector<std::uint32_t> sorted_by_weight(unsigned n) {
  std::vector<std::uint32_t> patterns(1U << n);
  for (std::uint32_t i = 0; i < patterns.size(); ++i) patterns[i] = i;
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     const auto wa = popcount32(a), wb = popcount32(b);
                     return wa != wb ? wa < wb : a < b;
                   });
  return patterns;
}

}  // namespace

InnerCode::InnerCode(unsigned n, unsigned k, std::vector<std::uint32_t> gen_rows,
                     std::string name)
    : n_(n), k_(k), name_(std::move(name)), gen_rows_(std::move(gen_rows)) {
  if (n == 0 || n > 16 || k == 0 || k > n) {
    throw std::invalid_argument("InnerCode: need 0 < k <= n <= 16");
  }
  // check matrix for G = [I_k | P]: rows h_j = (column j of P) | unit(k + j)
  const unsigned pm = n_ - k_;
  parity_rows_.assign(pm, 0);
  for (unsigned j = 0; j < pm; ++j) {
    std::uint32_t row = 1U << (k_ + j);
    for (unsigned i = 0; i < k_; ++i) {
      if (gen_rows_[i] >> (k_ + j) & 1U) row |= 1U << i;
    }
    parity_rows_[j] = row;
  }
  // coset leaders by increasing weight, numeric tie-break
  coset_leader_.assign(1U << pm, 0);
  std::vector<bool> seen(1U << pm, false);
  for (std::uint32_t e : sorted_by_weight(n_)) {
    std::uint32_t syn = 0;
    for (unsigned j = 0; j < pm; ++j) {
      syn |= static_cast<std::uint32_t>(std::popcount(e & parity_rows_[j]) & 1) << j;
    }
    if (!seen[syn]) {
      seen[syn] = true;
      coset_leader_[syn] = e;
    }
  }
  dmin_ = n_;
  for (std::uint32_t info = 1; info < (1U << k_); ++info) {
    dmin_ = std::min(dmin_, popcount32(encode(info)));
  }
}

std::uint32_t InnerCode::encode(std::uint32_t info) const {
  std::uint32_t word = 0;
  for (unsigned i = 0; i < k_; ++i) {
    if (info >> i & 1U) word ^= gen_rows_[i];
  }
  return word;
}

std::uint32_t InnerCode::decode(std::uint32_t word) const {
  const unsigned pm = n_ - k_;
  if (pm > 0) {
    std::uint32_t syn = 0;
    for (unsigned j = 0; j < pm; ++j) {
      syn |= static_cast<std::uint32_t>(std::popcount(word & parity_rows_[j]) & 1) << j;
    }
    word ^= coset_leader_[syn];
  }
  return word & ((1U << k_) - 1U);
}

InnerCode InnerCode::identity() { return InnerCode(1, 1, {1}, "identity"); }

InnerCode InnerCode::repetition(unsigned reps) {
  if (reps == 0 || reps > 16) {
    throw std::invalid_argument("InnerCode: repetition factor must be in [1,16]");
  }
  return InnerCode(reps, 1, {(1U << reps) - 1U}, "repetition" + std::to_string(reps));
}

InnerCode InnerCode::extended_hamming84() {
  // [8,4,4]: I_4 followed by the complement-of-identity parity block
  std::vector<std::uint32_t> rows(4);
  for (unsigned i = 0; i < 4; ++i) {
    std::uint32_t parity = 0xFU & ~(1U << i);
    rows[i] = (1U << i) | (parity << 4);
  }
  return InnerCode(8, 4, std::move(rows), "hamming84");
}

InnerCode InnerCode::table_code(unsigned n, unsigned k) {
  if (n == 0 || n > 16 || k == 0 || k > n) {
    throw std::invalid_argument("InnerCode: need 0 < k <= n <= 16");
  }
  const unsigned pm = n - k;
  std::string name = "table" + std::to_string(n) + "x" + std::to_string(k);
  if (pm == 0) {
    std::vector<std::uint32_t> rows(k);
    for (unsigned i = 0; i < k; ++i) rows[i] = 1U << i;
    return InnerCode(n, k, std::move(rows), std::move(name));
  }
  // pick the best of a fixed number of deterministically generated parity
  // blocks; the choice depends only on (n, k)
  std::uint64_t state = splitmix64((std::uint64_t{n} << 32) | k);
  std::vector<std::uint32_t> best_rows;
  unsigned best_d = 0;
  for (unsigned attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::uint32_t> rows(k);
    for (unsigned i = 0; i < k; ++i) {
      state = splitmix64(state);
      rows[i] = (1U << i) |
                (static_cast<std::uint32_t>(state & ((1U << pm) - 1U)) << k);
    }
    InnerCode candidate(n, k, rows, name);
    if (candidate.min_distance() > best_d) {
      best_d = candidate.min_distance();
      best_rows = std::move(rows);
    }
  }
  return InnerCode(n, k, std::move(best_rows), std::move(name));
}

InnerCode InnerCode::parse(const std::string& name) {
  if (name == "identity") return identity();
  if (name == "hamming84") return extended_hamming84();
  if (name.rfind("repetition", 0) == 0) {
    return repetition(static_cast<unsigned>(std::stoul(name.substr(10))));
  }
  if (name.rfind("table", 0) == 0) {
    const auto x = name.find('x');
    if (x != std::string::npos) {
      return table_code(static_cast<unsigned>(std::stoul(name.substr(5, x - 5))),
                        static_cast<unsigned>(std::stoul(name.substr(x + 1))));
    }
  }
  throw std::invalid_argument(
      "unknown inner code \"" + name +
      "\" (expected identity, repetitionK, hamming84, or tableNxK)");
}

unsigned index_bits_for(std::size_t m) {
  if (m < 2) throw std::invalid_argument("index_bits_for: m must be >= 2");
  return static_cast<unsigned>(std::bit_width(m - 1));
}

CodeSpec::Layout CodeSpec::layout(const ChannelParams& params) const {
  params.validate();
  if (params.q != 2) {
    throw std::invalid_argument("codec: only the binary alphabet is supported");
  }
  Layout lay{};
  const std::size_t l = params.l();
  lay.blocks = l / inner.n();
  lay.tail_symbols = l % inner.n();
  lay.info_bits = lay.blocks * inner.k();
  lay.index_bits = index_bits_for(params.m);
  if (lay.info_bits < lay.index_bits) {
    throw std::invalid_argument(
        "codec: infeasible spec, the index (" + std::to_string(lay.index_bits) +
        " bits) does not fit the " + std::to_string(lay.info_bits) +
        " info bits per string");
  }
  lay.payload_bits = lay.info_bits - lay.index_bits;
  const std::size_t r = outer_redundancy;
  if (r >= params.m) {
    throw std::invalid_argument("codec: outer redundancy must be < m");
  }
  if (r == 0) {
    lay.gf_w = 0;
    lay.stripe_symbols = 0;
    lay.slack_bits = 0;
    lay.data_strings = params.m;
    lay.net_payload_bits = params.m * lay.payload_bits;
  } else {
    if (params.m + r > 0xFFFF) {
      throw std::invalid_argument("codec: m + r exceeds the GF(2^16) limit");
    }
    lay.gf_w = static_cast<unsigned>(std::bit_width(params.m + r));
    lay.stripe_symbols = lay.payload_bits / lay.gf_w;
    lay.slack_bits = lay.payload_bits - lay.stripe_symbols * lay.gf_w;
    lay.data_strings = params.m - r;
    lay.net_payload_bits = lay.data_strings * lay.stripe_symbols * lay.gf_w;
  }
  return lay;
}

namespace {

std::uint32_t bits_to_value(std::span<const std::uint8_t> bits) {
  std::uint32_t v = 0;
  for (std::uint8_t b : bits) v = v << 1 | (b & 1U);
  return v;
}

void value_to_bits(std::uint32_t v, std::span<std::uint8_t> bits) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bits[i] = static_cast<std::uint8_t>(v >> (bits.size() - 1 - i) & 1U);
  }
}

}  // namespace

Pool encode(std::span<const std::uint8_t> payload, const CodeSpec& spec,
            const ChannelParams& params) {
  const auto lay = spec.layout(params);
  if (payload.size() != lay.net_payload_bits) {
    throw std::invalid_argument(
        "encode: payload must be exactly " + std::to_string(lay.net_payload_bits) +
        " bits, got " + std::to_string(payload.size()));
  }
  const std::size_t m = params.m;
  const std::size_t r = spec.outer_redundancy;

  // outer symbols, one row per string; parity strings are positions [0, r)
  std::vector<std::uint32_t> symbols;
  if (r > 0 && lay.stripe_symbols > 0) {
    symbols.assign(m * lay.stripe_symbols, 0);
    ReedSolomon rs(lay.gf_w, m, m - r);
    std::vector<std::uint32_t> data(m - r), word(m);
    for (std::size_t s = 0; s < lay.stripe_symbols; ++s) {
      for (std::size_t d = 0; d < m - r; ++d) {
        const std::size_t off =
            d * lay.stripe_symbols * lay.gf_w + s * lay.gf_w;
        data[d] = bits_to_value(payload.subspan(off, lay.gf_w));
      }
      rs.encode(data, word);
      for (std::size_t i = 0; i < m; ++i) symbols[i * lay.stripe_symbols + s] = word[i];
    }
  }

  Pool out(m, params.l(), 2);
  std::vector<std::uint8_t> info(lay.info_bits, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(info.begin(), info.end(), 0);
    value_to_bits(static_cast<std::uint32_t>(i),
                  std::span(info).first(lay.index_bits));
    auto region = std::span(info).subspan(lay.index_bits, lay.payload_bits);
    if (r == 0) {
      const auto src = payload.subspan(i * lay.payload_bits, lay.payload_bits);
      std::copy(src.begin(), src.end(), region.begin());
    } else {
      for (std::size_t s = 0; s < lay.stripe_symbols; ++s) {
        value_to_bits(symbols[i * lay.stripe_symbols + s],
                      region.subspan(s * lay.gf_w, lay.gf_w));
      }
      // slack bits stay zero: they carry no payload
    }
    auto row = out.row(i);
    for (std::size_t b = 0; b < lay.blocks; ++b) {
      std::uint32_t word = 0;
      for (unsigned j = 0; j < spec.inner.k(); ++j) {
        word |= static_cast<std::uint32_t>(info[b * spec.inner.k() + j]) << j;
      }
      word = spec.inner.encode(word);
      for (unsigned j = 0; j < spec.inner.n(); ++j) {
        row[b * spec.inner.n() + j] = static_cast<Symbol>(word >> j & 1U);
      }
    }
  }
  return out;
}

const char* string_status_name(StringStatus s) {
  switch (s) {
    case StringStatus::Ok: return "ok";
    case StringStatus::ErasedMissing: return "erased-missing";
    case StringStatus::ErasedCollision: return "erased-collision";
    case StringStatus::OuterCorrected: return "outer-corrected";
  }
  return "?";
}

DecodeReport decode(const Pool& received, const CodeSpec& spec,
                    const ChannelParams& params) {
  const auto lay = spec.layout(params);
  if (received.l() != params.l() || received.q() != 2) {
    throw std::invalid_argument("decode: received pool shape mismatch");
  }
  const std::size_t m = params.m;
  const std::size_t r = spec.outer_redundancy;

  DecodeReport report;
  report.status.assign(m, StringStatus::ErasedMissing);

  // collapse byte-identical rows, then inner-decode and claim indices
  std::unordered_set<std::string_view> seen;
  seen.reserve(received.m());
  std::vector<std::vector<std::uint8_t>> claimed(m);
  std::vector<std::size_t> claim_count(m, 0);
  std::vector<std::uint8_t> info(lay.info_bits);
  for (std::size_t row_idx = 0; row_idx < received.m(); ++row_idx) {
    auto row = received.row(row_idx);
    const std::string_view key(reinterpret_cast<const char*>(row.data()), row.size());
    if (!seen.insert(key).second) {
      ++report.dropped;
      continue;
    }
    for (std::size_t b = 0; b < lay.blocks; ++b) {
      std::uint32_t word = 0;
      for (unsigned j = 0; j < spec.inner.n(); ++j) {
        word |= static_cast<std::uint32_t>(row[b * spec.inner.n() + j] & 1U) << j;
      }
      const std::uint32_t dec = spec.inner.decode(word);
      for (unsigned j = 0; j < spec.inner.k(); ++j) {
        info[b * spec.inner.k() + j] = static_cast<std::uint8_t>(dec >> j & 1U);
      }
    }
    const std::uint32_t index = bits_to_value(std::span(info).first(lay.index_bits));
    if (index >= m) {
      ++report.dropped;
      continue;
    }
    ++claim_count[index];
    if (claim_count[index] == 1) {
      claimed[index].assign(info.begin() + lay.index_bits, info.end());
    } else {
      claimed[index].clear();
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (claim_count[i] == 1) {
      report.status[i] = StringStatus::Ok;
    } else if (claim_count[i] > 1) {
      report.status[i] = StringStatus::ErasedCollision;
    }
  }

  report.payload.assign(lay.net_payload_bits, 0);
  if (r == 0) {
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (report.status[i] == StringStatus::Ok) {
        std::copy(claimed[i].begin(), claimed[i].end(),
                  report.payload.begin() + i * lay.payload_bits);
      } else {
        ok = false;
      }
    }
    report.frame_ok = ok;
    return report;
  }

  if (lay.stripe_symbols == 0) {
    report.frame_ok = true;  // nothing to carry, nothing to fail
    return report;
  }

  std::vector<std::size_t> erasures;
  for (std::size_t i = 0; i < m; ++i) {
    if (report.status[i] != StringStatus::Ok) erasures.push_back(i);
  }

  ReedSolomon rs(lay.gf_w, m, m - r);
  std::vector<std::uint32_t> word(m);
  std::vector<std::size_t> error_positions;
  std::vector<std::uint32_t> symbols(m * lay.stripe_symbols, 0);
  bool all_ok = true;
  for (std::size_t s = 0; s < lay.stripe_symbols; ++s) {
    for (std::size_t i = 0; i < m; ++i) {
      word[i] = claimed[i].empty()
                    ? 0
                    : bits_to_value(std::span<const std::uint8_t>(claimed[i])
                                        .subspan(s * lay.gf_w, lay.gf_w));
    }
    const bool ok = rs.decode(word, erasures, &error_positions);
    if (ok) {
      for (std::size_t pos : error_positions) {
        if (report.status[pos] == StringStatus::Ok) {
          report.status[pos] = StringStatus::OuterCorrected;
        }
      }
    } else {
      all_ok = false;
    }
    for (std::size_t i = 0; i < m; ++i) symbols[i * lay.stripe_symbols + s] = word[i];
  }

  for (std::size_t d = 0; d < lay.data_strings; ++d) {
    for (std::size_t s = 0; s < lay.stripe_symbols; ++s) {
      const std::size_t off = d * lay.stripe_symbols * lay.gf_w + s * lay.gf_w;
      value_to_bits(symbols[(r + d) * lay.stripe_symbols + s],
                    std::span(report.payload).subspan(off, lay.gf_w));
    }
  }
  report.frame_ok = all_ok;
  return report;
}

double achieved_rate(const CodeSpec& spec, const ChannelParams& params) {
  const auto lay = spec.layout(params);
  return static_cast<double>(lay.net_payload_bits) /
         (static_cast<double>(params.m) * static_cast<double>(params.l()));
}

}  // namespace nsc
