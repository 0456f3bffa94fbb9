#include "nsc/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsc {

ReedSolomon::ReedSolomon(unsigned w, std::size_t n, std::size_t k)
    : gf_(w), n_(n), k_(k) {
  if (n == 0 || k > n) throw std::invalid_argument("ReedSolomon: need 0 < k <= n");
  if (n > gf_.order()) {
    throw std::invalid_argument("ReedSolomon: n exceeds 2^w - 1");
  }
  // g(x) = prod_{j=1..r} (x - alpha^j)
  const std::size_t r = n_ - k_;
  gen_.assign(r + 1, 0);
  gen_[0] = 1;
  for (std::size_t j = 1; j <= r; ++j) {
    const std::uint32_t root = gf_.alpha_pow(static_cast<long long>(j));
    for (std::size_t i = j; i-- > 0;) {
      gen_[i + 1] ^= gen_[i];
      gen_[i] = gf_.mul(gen_[i], root);
    }
  }
}

void ReedSolomon::encode(std::span<const std::uint32_t> data,
                         std::span<std::uint32_t> out) const {
  const std::size_t r = n_ - k_;
  if (data.size() != k_ || out.size() != n_) {
    throw std::invalid_argument("ReedSolomon::encode: size mismatch");
  }
  if (r == 0) {
    std::copy(data.begin(), data.end(), out.begin());
    return;
  }
  // parity = (m(x) * x^r) mod g(x), long division feeding data high to low
  std::vector<std::uint32_t> rem(r, 0);
  for (std::size_t i = k_; i-- > 0;) {
    const std::uint32_t feedback = data[i] ^ rem[r - 1];
    for (std::size_t j = r; j-- > 1;) {
      rem[j] = rem[j - 1] ^ gf_.mul(feedback, gen_[j]);
    }
    rem[0] = gf_.mul(feedback, gen_[0]);
  }
  for (std::size_t j = 0; j < r; ++j) out[j] = rem[j];
  for (std::size_t i = 0; i < k_; ++i) out[r + i] = data[i];
}

bool ReedSolomon::decode(std::span<std::uint32_t> word,
                         std::span<const std::size_t> erasures,
                         std::vector<std::size_t>* error_positions) const {
  const std::size_t r = n_ - k_;
  if (word.size() != n_) {
    throw std::invalid_argument("ReedSolomon::decode: size mismatch");
  }
  if (error_positions) error_positions->clear();
  if (erasures.size() > r) return false;
  for (std::size_t pos : erasures) {
    if (pos >= n_) throw std::invalid_argument("ReedSolomon::decode: erasure out of range");
  }
  if (r == 0) return true;

  // syndromes S_j = c(alpha^j), j = 1..r
  std::vector<std::uint32_t> syn(r, 0);
  bool clean = true;
  for (std::size_t j = 0; j < r; ++j) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (word[i]) {
        s ^= gf_.mul(word[i], gf_.alpha_pow(static_cast<long long>(i) *
                                            static_cast<long long>(j + 1)));
      }
    }
    syn[j] = s;
    clean = clean && s == 0;
  }
  if (clean) return true;

  // erasure locator, then Berlekamp-Massey over the remaining steps
  std::vector<std::uint32_t> lambda(r + 1, 0), b(r + 1, 0), t(r + 1, 0);
  lambda[0] = 1;
  for (std::size_t pos : erasures) {
    const std::uint32_t x = gf_.alpha_pow(static_cast<long long>(pos));
    for (std::size_t i = r; i-- > 0;) {
      lambda[i + 1] ^= gf_.mul(lambda[i], x);
    }
  }
  b = lambda;

  const std::size_t e0 = erasures.size();
  std::size_t el = e0;
  for (std::size_t step = e0 + 1; step <= r; ++step) {
    std::uint32_t discr = 0;
    for (std::size_t i = 0; i < step; ++i) {
      if (lambda[i]) discr ^= gf_.mul(lambda[i], syn[step - 1 - i]);
    }
    if (discr == 0) {
      for (std::size_t i = r; i-- > 0;) b[i + 1] = b[i];
      b[0] = 0;
    } else {
      t[0] = lambda[0];
      for (std::size_t i = 0; i < r; ++i) {
        t[i + 1] = lambda[i + 1] ^ gf_.mul(discr, b[i]);
      }
      if (2 * el <= step + e0 - 1) {
        el = step + e0 - el;
        const std::uint32_t dinv = gf_.inv(discr);
        for (std::size_t i = 0; i <= r; ++i) b[i] = gf_.mul(lambda[i], dinv);
      } else {
        for (std::size_t i = r; i-- > 0;) b[i + 1] = b[i];
        b[0] = 0;
      }
      lambda = t;
    }
  }

  std::size_t deg = 0;
  for (std::size_t i = 0; i <= r; ++i) {
    if (lambda[i]) deg = i;
  }

  // Chien search over the shortened range
  std::vector<std::size_t> roots;
  for (std::size_t pos = 0; pos < n_ && roots.size() <= deg; ++pos) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i <= deg; ++i) {
      if (lambda[i]) {
        v ^= gf_.mul(lambda[i], gf_.alpha_pow(-static_cast<long long>(pos) *
                                              static_cast<long long>(i)));
      }
    }
    if (v == 0) roots.push_back(pos);
  }
  if (roots.size() != deg) return false;

  // omega = S(x) * lambda(x) mod x^r
  std::vector<std::uint32_t> omega(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    std::uint32_t v = 0;
    for (std::size_t j = 0; j <= std::min(i, deg); ++j) {
      if (lambda[j]) v ^= gf_.mul(lambda[j], syn[i - j]);
    }
    omega[i] = v;
  }

  // Forney: magnitude at position pos is omega(Xinv) / lambda'(Xinv)
  for (std::size_t pos : roots) {
    const long long xinv_exp = -static_cast<long long>(pos);
    std::uint32_t num = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (omega[i]) {
        num ^= gf_.mul(omega[i], gf_.alpha_pow(xinv_exp * static_cast<long long>(i)));
      }
    }
    std::uint32_t den = 0;
    for (std::size_t i = 1; i <= deg; i += 2) {
      if (lambda[i]) {
        den ^= gf_.mul(lambda[i],
                       gf_.alpha_pow(xinv_exp * static_cast<long long>(i - 1)));
      }
    }
    if (den == 0) return false;
    word[pos] ^= gf_.div(num, den);
  }

  // corrected word must be a codeword
  for (std::size_t j = 0; j < r; ++j) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (word[i]) {
        s ^= gf_.mul(word[i], gf_.alpha_pow(static_cast<long long>(i) *
                                            static_cast<long long>(j + 1)));
      }
    }
    if (s != 0) return false;
  }

  if (error_positions) {
    for (std::size_t pos : roots) {
      if (std::find(erasures.begin(), erasures.end(), pos) == erasures.end()) {
        error_positions->push_back(pos);
      }
    }
  }
  return true;
}

}  // namespace nsc
