#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace nsc {

using Symbol = std::uint8_t;
using SymbolString = std::vector<Symbol>;

/// M strings of length L over the alphabet [0, q), stored row-major.
/// This is the unit every channel stage consumes and produces.
class Pool {
 public:
  Pool() = default;
  Pool(std::size_t m, std::size_t l, unsigned q);
  static Pool from_strings(const std::vector<SymbolString>& strings, unsigned q);

  std::size_t m() const { return m_; }
  std::size_t l() const { return l_; }
  unsigned q() const { return q_; }

  std::span<Symbol> row(std::size_t i) { return {data_.data() + i * l_, l_}; }
  std::span<const Symbol> row(std::size_t i) const {
    return {data_.data() + i * l_, l_};
  }
  Symbol operator()(std::size_t i, std::size_t j) const { return data_[i * l_ + j]; }
  Symbol& operator()(std::size_t i, std::size_t j) { return data_[i * l_ + j]; }

  std::vector<Symbol>& data() { return data_; }
  const std::vector<Symbol>& data() const { return data_; }

  bool operator==(const Pool&) const = default;

 private:
  std::size_t m_ = 0;
  std::size_t l_ = 0;
  unsigned q_ = 2;
  std::vector<Symbol> data_;
};

/// Positions where a and b differ. Throws std::invalid_argument on length
/// mismatch.
std::size_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b);

/// Text format used by the CLI to pipe channel stages: a header line
/// "M L q" followed by one string per line, symbols as decimal digits.
/// Only q <= 10 is representable.
void save_pool(std::ostream& os, const Pool& pool);
Pool load_pool(std::istream& is);

}  // namespace nsc
