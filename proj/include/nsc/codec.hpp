#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nsc/params.hpp"
#include "nsc/pool.hpp"

namespace nsc {

/// Binary linear block code in systematic form [I_k | P] with coset-leader
/// (minimum-distance) decoding from an exhaustive syndrome table. n <= 16.
class InnerCode {
 public:
  static InnerCode identity();
  static InnerCode repetition(unsigned reps);
  static InnerCode extended_hamming84();
  /// Systematic code with a parity block generated deterministically from
  /// (n, k); a near-ML small-block stand-in for an asymptotically good code.
  static InnerCode table_code(unsigned n, unsigned k);
  /// "identity" | "repetitionK" | "hamming84" | "tableNxK", e.g. "table12x8".
  static InnerCode parse(const std::string& name);

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  unsigned min_distance() const { return dmin_; }
  const std::string& name() const { return name_; }

  /// info bits packed as bit j of the word = j-th bit of the block.
  std::uint32_t encode(std::uint32_t info) const;
  /// nearest-codeword decode; returns the info bits.
  std::uint32_t decode(std::uint32_t word) const;

 private:
  InnerCode(unsigned n, unsigned k, std::vector<std::uint32_t> gen_rows,
            std::string name);

  unsigned n_, k_, dmin_;
  std::string name_;
  std::vector<std::uint32_t> gen_rows_;      // k rows of n bits
  std::vector<std::uint32_t> parity_rows_;   // n-k rows of the check matrix
  std::vector<std::uint32_t> coset_leader_;  // 2^(n-k) error patterns
};

/// ceil(log2 m): width of the per-string index field.
unsigned index_bits_for(std::size_t m);

/// Inner code choice plus outer redundancy. The outer code is a systematic
/// Reed-Solomon code over GF(2^w), w = ceil(log2(M + r + 1)), striping each
/// string's payload into w-bit symbols; the first r strings carry parity.
struct CodeSpec {
  InnerCode inner = InnerCode::identity();
  std::size_t outer_redundancy = 0;

  struct Layout {
    std::size_t blocks;         // full inner blocks per string
    std::size_t tail_symbols;   // trailing channel symbols sent as zero filler
    std::size_t info_bits;      // decoded bits per string
    unsigned index_bits;
    std::size_t payload_bits;   // info_bits - index_bits
    unsigned gf_w;              // 0 when r == 0
    std::size_t stripe_symbols; // outer symbols per string (0 when r == 0)
    std::size_t slack_bits;     // payload bits unused by striping
    std::size_t data_strings;   // m - r
    std::size_t net_payload_bits;
  };

  /// Derived geometry; throws std::invalid_argument when the spec cannot fit
  /// (index wider than the info block, r >= m, ...).
  Layout layout(const ChannelParams& params) const;
};

enum class StringStatus : std::uint8_t {
  Ok,              // exactly one claimant delivered this index
  ErasedMissing,   // no claimant
  ErasedCollision, // two or more claimants, all discarded
  OuterCorrected,  // single claimant whose symbols the outer code rewrote
};
const char* string_status_name(StringStatus s);

struct DecodeReport {
  std::vector<std::uint8_t> payload;  // net_payload_bits entries of 0/1
  std::vector<StringStatus> status;   // one per index position, size m
  std::size_t dropped = 0;            // invalid indices + duplicate samples
  bool frame_ok = false;
};

/// payload.size() must equal layout.net_payload_bits. String i carries the
/// big-endian index i in its first index_bits info bits.
Pool encode(std::span<const std::uint8_t> payload, const CodeSpec& spec,
            const ChannelParams& params);

/// Inner-decodes every received string, resolves index claims (collisions
/// erase all claimants), and runs the outer code when r > 0. Byte-identical
/// received strings are collapsed before claiming; with the sampling stage
/// they are expected duplicates.
DecodeReport decode(const Pool& received, const CodeSpec& spec,
                    const ChannelParams& params);

/// Net information bits per channel symbol.
double achieved_rate(const CodeSpec& spec, const ChannelParams& params);

}  // namespace nsc
