#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "nsc/math.hpp"
#include "nsc/pool.hpp"

using namespace nsc;

TEST_CASE("binary entropy pinned values") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  // high-precision evaluation of -p log2 p - (1-p) log2 (1-p) at p = 0.1
  CHECK(binary_entropy(0.1) == doctest::Approx(0.468995593589281).epsilon(1e-12));
  CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("binary entropy symmetry on a grid") {
  for (int i = 0; i <= 1000; ++i) {
    const double p = i / 1000.0;
    CHECK(std::abs(binary_entropy(p) - binary_entropy(1.0 - p)) <= 1e-12);
  }
}

TEST_CASE("binary KL pinned values and edge cases") {
  CHECK(kl_binary(0.5, 0.5) == 0.0);
  // 0.2 log2(2) + 0.8 log2(8/9), evaluated independently
  CHECK(kl_binary(0.2, 0.1) == doctest::Approx(0.064059998846150).epsilon(1e-12));
  CHECK(std::isinf(kl_binary(0.3, 0.0)));
  CHECK(kl_binary(0.0, 0.0) == 0.0);
  CHECK(kl_binary(1.0, 1.0) == 0.0);
  CHECK(std::isinf(kl_binary(0.3, 1.0)));
}

TEST_CASE("binary KL is nonnegative, zero only on the diagonal") {
  for (int i = 0; i <= 50; ++i) {
    for (int j = 1; j < 50; ++j) {
      const double delta = i / 50.0;
      const double p = j / 50.0;
      const double d = kl_binary(delta, p);
      CHECK(d >= 0.0);
      if (std::abs(delta - p) > 1e-12) {
        CHECK(d > 0.0);
      } else {
        CHECK(d == doctest::Approx(0.0).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("log2 factorial") {
  CHECK(log2_factorial(0) == 0.0);
  CHECK(log2_factorial(1) == 0.0);
  CHECK(log2_factorial(2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(log2_factorial(4) == doctest::Approx(std::log2(24.0)).epsilon(1e-14));
}

TEST_CASE("binomial tail against direct summation") {
  // sum_{k>=6} C(20,k) 0.1^k 0.9^(20-k), high-precision reference
  CHECK(binomial_tail(20, 0.1, 6) ==
        doctest::Approx(0.011253134164509).epsilon(1e-11));
  CHECK(binomial_tail(10, 0.1, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(binomial_tail(10, 0.0, 1) == 0.0);
  CHECK(binomial_tail(10, 0.0, 0) == 1.0);
  CHECK(binomial_tail(10, 1.0, 10) == 1.0);
  CHECK(binomial_tail(10, 0.3, 11) == 0.0);
}

TEST_CASE("hamming ball log sizes") {
  // radius 0: just the center
  auto b = hamming_ball_log_size(3, 0.0, 2);
  CHECK(b.exact == 0.0);
  CHECK(b.bound == 0.0);
  // L=3, alpha=1/3: radius 1, 1 + 3 points
  b = hamming_ball_log_size(3, 1.0 / 3.0, 2);
  CHECK(b.exact == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(b.bound == doctest::Approx(2.754887502163469).epsilon(1e-12));
  // L=8, alpha=1/4: 1 + 8 + 28 points
  b = hamming_ball_log_size(8, 0.25, 2);
  CHECK(b.exact == doctest::Approx(std::log2(37.0)).epsilon(1e-12));
  // quaternary, radius 1: 1 + 3*3 points
  b = hamming_ball_log_size(3, 1.0 / 3.0, 4);
  CHECK(b.exact == doctest::Approx(std::log2(10.0)).epsilon(1e-12));
}

TEST_CASE("exact ball size never exceeds the entropy bound (binary)") {
  for (unsigned length = 1; length <= 20; ++length) {
    for (int a = 0; a <= 10; ++a) {
      const double alpha = a / 20.0;  // [0, 0.5]
      const auto b = hamming_ball_log_size(length, alpha, 2);
      CHECK(b.exact <= b.bound + 1e-12);
    }
  }
}

TEST_CASE("hamming distance is a metric") {
  nsc::SymbolString a{0, 0, 0}, b{0, 0, 0}, c{1, 1, 1};
  CHECK(hamming_distance(a, b) == 0);
  CHECK(hamming_distance(a, c) == 3);
  nsc::SymbolString d{0, 1, 0, 1}, e{0, 0, 1, 1};
  CHECK(hamming_distance(d, e) == 2);
  CHECK_THROWS_AS(hamming_distance(a, d), std::invalid_argument);

  // nonnegativity, identity, symmetry, triangle inequality on random triples
  std::uint64_t state = 12345;
  auto next = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int round = 0; round < 1000; ++round) {
    const std::size_t len = 1 + next() % 24;
    nsc::SymbolString x(len), y(len), z(len);
    for (std::size_t i = 0; i < len; ++i) {
      x[i] = static_cast<nsc::Symbol>(next() % 4);
      y[i] = static_cast<nsc::Symbol>(next() % 4);
      z[i] = static_cast<nsc::Symbol>(next() % 4);
    }
    const auto dxy = hamming_distance(x, y);
    const auto dyx = hamming_distance(y, x);
    const auto dxz = hamming_distance(x, z);
    const auto dzy = hamming_distance(z, y);
    CHECK(dxy == dyx);
    CHECK(dxy <= len);
    CHECK((dxy == 0) == (x == y));
    CHECK(dxy <= dxz + dzy);
  }
}

TEST_CASE("distance threshold is the ceiling of alpha*L") {
  CHECK(distance_threshold(0.5, 3) == 2);
  CHECK(distance_threshold(1.0 / 3.0, 3) == 1);
  CHECK(distance_threshold(0.25, 10) == 3);
  CHECK(distance_threshold(0.5, 4) == 2);
  CHECK(distance_threshold(0.3, 10) == 3);
}
