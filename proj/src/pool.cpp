#include "nsc/pool.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nsc {

Pool::Pool(std::size_t m, std::size_t l, unsigned q)
    : m_(m), l_(l), q_(q), data_(m * l, 0) {
  if (q < 2) throw std::invalid_argument("Pool: q must be >= 2");
  if (l == 0) throw std::invalid_argument("Pool: string length must be positive");
}

Pool Pool::from_strings(const std::vector<SymbolString>& strings, unsigned q) {
  if (strings.empty()) throw std::invalid_argument("Pool: no strings");
  Pool pool(strings.size(), strings.front().size(), q);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (strings[i].size() != pool.l()) {
      throw std::invalid_argument("Pool: strings must have uniform length");
    }
    for (std::size_t j = 0; j < pool.l(); ++j) {
      if (strings[i][j] >= q) {
        throw std::invalid_argument("Pool: symbol out of alphabet");
      }
      pool(i, j) = strings[i][j];
    }
  }
  return pool;
}

std::size_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming_distance: length mismatch");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

void save_pool(std::ostream& os, const Pool& pool) {
  if (pool.q() > 10) {
    throw std::invalid_argument("save_pool: text format supports q <= 10");
  }
  os << pool.m() << ' ' << pool.l() << ' ' << pool.q() << '\n';
  std::string line(pool.l(), '0');
  for (std::size_t i = 0; i < pool.m(); ++i) {
    for (std::size_t j = 0; j < pool.l(); ++j) {
      line[j] = static_cast<char>('0' + pool(i, j));
    }
    os << line << '\n';
  }
}

Pool load_pool(std::istream& is) {
  std::size_t m = 0, l = 0;
  unsigned q = 0;
  if (!(is >> m >> l >> q)) {
    throw std::runtime_error("load_pool: bad header, expected \"M L q\"");
  }
  if (q < 2 || q > 10) throw std::runtime_error("load_pool: q out of range");
  Pool pool(m, l, q);
  std::string line;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(is >> line) || line.size() != l) {
      throw std::runtime_error("load_pool: expected " + std::to_string(m) +
                               " lines of " + std::to_string(l) + " digits");
    }
    for (std::size_t j = 0; j < l; ++j) {
      const char ch = line[j];
      if (ch < '0' || static_cast<unsigned>(ch - '0') >= q) {
        throw std::runtime_error("load_pool: symbol out of alphabet");
      }
      pool(i, j) = static_cast<Symbol>(ch - '0');
    }
  }
  return pool;
}

}  // namespace nsc
