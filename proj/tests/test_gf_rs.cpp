#include <algorithm>
#include <bit>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "nsc/gf.hpp"
#include "nsc/rng.hpp"
#include "nsc/rs.hpp"

using namespace nsc;

TEST_CASE("GF(2^w) field axioms") {
  for (unsigned w : {2U, 4U, 8U, 13U}) {
    GF2m gf(w);
    // every nonzero element has a multiplicative inverse
    for (std::uint32_t a = 1; a <= std::min<std::uint32_t>(gf.order(), 4096); ++a) {
      CHECK(gf.mul(a, gf.inv(a)) == 1);
    }
    // spot-check distributivity and exp/log round trips
    Rng rng(w);
    for (int i = 0; i < 200; ++i) {
      const auto a = static_cast<std::uint32_t>(rng.below(gf.order() + 1));
      const auto b = static_cast<std::uint32_t>(rng.below(gf.order() + 1));
      const auto c = static_cast<std::uint32_t>(rng.below(gf.order() + 1));
      CHECK(gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c)));
      if (a) CHECK(gf.alpha_pow(gf.log(a)) == a);
    }
    CHECK(gf.alpha_pow(gf.order()) == 1);
    CHECK(gf.alpha_pow(-1) == gf.inv(gf.alpha_pow(1)));
  }
}

namespace {

std::vector<std::uint32_t> random_symbols(const ReedSolomon& rs, Rng& rng) {
  std::vector<std::uint32_t> data(rs.k());
  for (auto& d : data) {
    d = static_cast<std::uint32_t>(rng.below(rs.field().order() + 1));
  }
  return data;
}

struct Corruption {
  std::vector<std::uint32_t> word;
  std::vector<std::size_t> erasures;
};

// inject e erasures and t errors at distinct random positions
Corruption corrupt(const ReedSolomon& rs, const std::vector<std::uint32_t>& code,
                   std::size_t erasures, std::size_t errors, Rng& rng) {
  Corruption out{code, {}};
  std::vector<std::size_t> positions(rs.n());
  for (std::size_t i = 0; i < rs.n(); ++i) positions[i] = i;
  for (std::size_t i = 0; i < erasures + errors; ++i) {
    std::swap(positions[i], positions[i + rng.below(rs.n() - i)]);
  }
  for (std::size_t i = 0; i < erasures; ++i) {
    out.erasures.push_back(positions[i]);
    out.word[positions[i]] =
        static_cast<std::uint32_t>(rng.below(rs.field().order() + 1));
  }
  for (std::size_t i = erasures; i < erasures + errors; ++i) {
    const std::uint32_t wrong =
        1 + static_cast<std::uint32_t>(rng.below(rs.field().order()));
    out.word[positions[i]] ^= wrong;  // guaranteed to change the symbol
  }
  return out;
}

}  // namespace

TEST_CASE("RS encode is systematic and decodes clean words") {
  Rng rng(11);
  ReedSolomon rs(4, 15, 9);
  auto data = random_symbols(rs, rng);
  std::vector<std::uint32_t> code(rs.n());
  rs.encode(data, code);
  for (std::size_t i = 0; i < rs.k(); ++i) CHECK(code[rs.r() + i] == data[i]);
  auto word = code;
  CHECK(rs.decode(word, {}));
  CHECK(word == code);
}

TEST_CASE("RS corrects every erasure-only pattern up to r (exhaustive, n=10)") {
  ReedSolomon rs(4, 10, 6);
  Rng rng(21);
  auto data = random_symbols(rs, rng);
  std::vector<std::uint32_t> code(rs.n());
  rs.encode(data, code);
  for (std::uint32_t mask = 0; mask < 1024; ++mask) {
    const auto e = static_cast<std::size_t>(std::popcount(mask));
    if (e > rs.r()) continue;
    std::vector<std::size_t> erasures;
    auto word = code;
    for (std::size_t i = 0; i < 10; ++i) {
      if (mask >> i & 1U) {
        erasures.push_back(i);
        word[i] ^= 0x7;
      }
    }
    REQUIRE(rs.decode(word, erasures));
    CHECK(word == code);
  }
}

TEST_CASE("RS corrects e erasures plus t errors whenever e + 2t <= r") {
  const std::tuple<unsigned, std::size_t, std::size_t> shapes[] = {
      {4, 15, 7}, {8, 100, 80}, {8, 255, 223}};
  for (auto [w, n, k] : shapes) {
    ReedSolomon rs(w, n, k);
    Rng rng(w * 1000 + n);
    for (int round = 0; round < 300; ++round) {
      auto data = random_symbols(rs, rng);
      std::vector<std::uint32_t> code(rs.n());
      rs.encode(data, code);
      const auto e = static_cast<std::size_t>(rng.below(rs.r() + 1));
      const auto t = static_cast<std::size_t>(rng.below((rs.r() - e) / 2 + 1));
      auto cor = corrupt(rs, code, e, t, rng);
      std::vector<std::size_t> fixed;
      REQUIRE(rs.decode(cor.word, cor.erasures, &fixed));
      CHECK(cor.word == code);
    }
  }
}

TEST_CASE("RS detects most patterns just beyond the radius") {
  // at e + 2t = r + 1 nothing is guaranteed: the decoder may fail, may
  // miscorrect, and may even luckily recover. It must flag failure most of
  // the time, and whatever it returns on success must be a codeword.
  ReedSolomon rs(6, 60, 40);
  Rng rng(99);
  std::size_t detected = 0;
  const int rounds = 200;
  for (int round = 0; round < rounds; ++round) {
    auto data = random_symbols(rs, rng);
    std::vector<std::uint32_t> code(rs.n());
    rs.encode(data, code);
    const std::size_t t = 1 + rng.below(rs.r() / 2);
    const std::size_t e = rs.r() + 1 - 2 * t;
    auto cor = corrupt(rs, code, e, t, rng);
    auto word = cor.word;
    const bool ok = rs.decode(word, cor.erasures);
    if (!ok) {
      ++detected;
    } else {
      std::vector<std::uint32_t> reenc(rs.n());
      rs.encode({word.begin() + static_cast<long>(rs.r()), word.end()}, reenc);
      CHECK(reenc == word);
    }
  }
  CHECK(detected > rounds / 2);
}

TEST_CASE("RS shortened code at the simulate scale") {
  ReedSolomon rs(13, 4096, 3840);
  Rng rng(5);
  auto data = random_symbols(rs, rng);
  std::vector<std::uint32_t> code(rs.n());
  rs.encode(data, code);
  auto cor = corrupt(rs, code, 100, 70, rng);  // 100 + 140 <= 256
  REQUIRE(rs.decode(cor.word, cor.erasures));
  CHECK(cor.word == code);
}

TEST_CASE("RS rejects too many erasures") {
  ReedSolomon rs(4, 15, 11);
  std::vector<std::uint32_t> word(15, 0);
  std::vector<std::size_t> erasures = {0, 1, 2, 3, 4};
  CHECK_FALSE(rs.decode(word, erasures));
}
