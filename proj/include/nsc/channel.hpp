#pragma once

#include <cstdint>
#include <vector>

#include "nsc/params.hpp"
#include "nsc/pool.hpp"
#include "nsc/rng.hpp"

namespace nsc {

/// Hidden channel state retained for diagnostics and the entropy oracle.
/// Never made available to a decoder.
struct ChannelTrace {
  std::vector<std::uint32_t> shuffle;  // out[k] = in[shuffle[k]]
  Pool errors;                         // additive error pattern, input order
  std::vector<std::uint32_t> sampled_indices;
};

struct CorruptResult {
  Pool output;
  Pool errors;  // offsets mod q; all-zero iff the pool passed through clean
};

/// q-ary symmetric noise: each symbol is independently replaced with total
/// probability p, uniformly among the q-1 other symbols. Output symbol is
/// (x + z) mod q with the offset pool z returned alongside. Accepts the
/// full mechanical range p in [0,1] (p = 1 flips every binary symbol).
CorruptResult corrupt_symmetric(const Pool& in, double p, Rng& rng);

struct ShuffleResult {
  Pool output;
  std::vector<std::uint32_t> perm;  // output[k] == input[perm[k]]
};

/// Uniformly random reordering (Fisher-Yates). The permutation lives in the
/// trace only; decoders never see it.
ShuffleResult shuffle_pool(const Pool& in, Rng& rng);

struct SampleResult {
  Pool output;
  std::vector<std::uint32_t> indices;  // source index of each draw
};

/// N = round(c*M) i.i.d. uniform draws with replacement.
SampleResult sample_pool(const Pool& in, double c, Rng& rng);

/// Row-stochastic transition matrix, optionally symmetric in the sense of
/// Gallager/Cover-Thomas: rows are permutations of each other and columns
/// are permutations of each other.
class DmcSpec {
 public:
  explicit DmcSpec(std::vector<std::vector<double>> rows);

  std::size_t input_alphabet() const { return rows_.size(); }
  std::size_t output_alphabet() const { return rows_.front().size(); }
  const std::vector<double>& row(std::size_t x) const { return rows_[x]; }

  bool symmetric() const { return symmetric_; }
  /// Entropy of a transition row in bits (rows of a symmetric channel are
  /// permutations of one another, so any row serves).
  double row_entropy() const;

  static DmcSpec bsc(double p);
  static DmcSpec q_symmetric(unsigned q, double p);

 private:
  std::vector<std::vector<double>> rows_;
  bool symmetric_ = false;
};

struct DmcResult {
  Pool output;
  Pool substituted;  // pre-shuffle outputs recorded for reconstruction checks
};

/// Each symbol passed independently through the transition matrix.
DmcResult corrupt_dmc(const Pool& in, const DmcSpec& dmc, Rng& rng);

struct TransmitResult {
  Pool output;
  ChannelTrace trace;
};

/// The full channel: symmetric noise at params.p, uniform shuffle, and the
/// sampling stage when params.c is set.
TransmitResult transmit(const Pool& in, const ChannelParams& params, Rng& rng);

}  // namespace nsc
