#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nsc/gf.hpp"

namespace nsc {

/// Systematic Reed-Solomon code over GF(2^w), shortened to length n from
/// 2^w - 1. Corrects e erasures plus t unknown errors whenever
/// e + 2t <= n - k (Berlekamp-Massey with erasure initialization, Chien
/// search, Forney magnitudes).
///
/// Codeword layout: coefficient i of the code polynomial is symbol i.
/// Parity occupies positions [0, r), data positions [r, n).
class ReedSolomon {
 public:
  ReedSolomon(unsigned w, std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t r() const { return n_ - k_; }

  /// data.size() == k; out.size() == n. Systematic: out[r + i] = data[i].
  void encode(std::span<const std::uint32_t> data,
              std::span<std::uint32_t> out) const;

  /// In-place correction. Erasure positions index into the codeword.
  /// Returns false when the pattern is detectably uncorrectable (the word is
  /// left unspecified in that case). When error_positions is non-null it
  /// receives the positions the decoder corrected beyond the given erasures.
  bool decode(std::span<std::uint32_t> word,
              std::span<const std::size_t> erasures,
              std::vector<std::size_t>* error_positions = nullptr) const;

  const GF2m& field() const { return gf_; }

 private:
  GF2m gf_;
  std::size_t n_, k_;
  std::vector<std::uint32_t> gen_;  // generator polynomial, gen_[0] = const term
};

}  // namespace nsc
