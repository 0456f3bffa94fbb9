#include <cmath>
#include <sstream>

#include "doctest.h"
#include "nsc/capacity.hpp"
#include "nsc/math.hpp"

using namespace nsc;

TEST_CASE("noisy shuffle capacity pinned values") {
  CHECK(capacity_noisy_shuffle(0.0, 4.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(capacity_noisy_shuffle(0.1, 6.4) ==
        doctest::Approx(0.374754406410719).epsilon(1e-12));
  CHECK(capacity_noisy_shuffle(0.3, 1.0) == 0.0);
  CHECK(capacity_noisy_shuffle(0.0, 0.5) == 0.0);
  CHECK_THROWS(capacity_noisy_shuffle(0.6, 4.0));
}

TEST_CASE("upper bound pinned values and dominance") {
  CHECK(capacity_upper_bound(0.0, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(capacity_upper_bound(0.1, 100.0) ==
        doctest::Approx(0.531004406410719).epsilon(1e-12));
  CHECK(capacity_upper_bound(0.1, 6.4) ==
        doctest::Approx(0.531004406410719).epsilon(1e-12));

  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 200; ++j) {
      const double p = 0.5 * i / 199.0;
      const double beta = 0.1 + 20.0 * j / 199.0;
      CHECK(capacity_noisy_shuffle(p, beta) <=
            capacity_upper_bound(p, beta) + 1e-12);
    }
  }
}

TEST_CASE("sampled shuffle capacity") {
  CHECK(capacity_sampled_shuffle(50.0, 4.0) == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(capacity_sampled_shuffle(1.0, 4.0) ==
        doctest::Approx(0.474090419121418).epsilon(1e-12));
  CHECK(capacity_sampled_shuffle(1.0, 0.5) == 0.0);
}

TEST_CASE("SDMC shuffle capacity") {
  // binary case collapses to the BSC formula
  for (double p : {0.0, 0.05, 0.1, 0.2}) {
    CHECK(capacity_sdmc_shuffle(DmcSpec::bsc(p), 8.0) ==
          doctest::Approx(capacity_noisy_shuffle(p, 8.0)).epsilon(1e-12));
    CHECK(std::log2(2.0) - DmcSpec::bsc(p).row_entropy() ==
          doctest::Approx(1.0 - binary_entropy(p)).epsilon(1e-12));
  }
  // ternary symmetric, flip 0.1, beta = 10
  const double expected = std::log2(3.0) -
                          (-(0.9 * std::log2(0.9)) - 0.1 * std::log2(0.05)) - 0.1;
  CHECK(capacity_sdmc_shuffle(DmcSpec::q_symmetric(3, 0.1), 10.0) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(capacity_sdmc_shuffle(DmcSpec::q_symmetric(3, 0.1), 10.0) ==
        doctest::Approx(0.915966907131875).epsilon(1e-10));
  // |Y| = 4 and beta = 2 <= log2(4): zero
  CHECK(capacity_sdmc_shuffle(DmcSpec::q_symmetric(4, 0.1), 2.0) == 0.0);
  CHECK_THROWS(capacity_sdmc_shuffle(DmcSpec({{0.9, 0.1}, {0.2, 0.8}}), 4.0));
}

TEST_CASE("region classification") {
  auto rc = classify_region(0.05, 10.0);
  CHECK(rc.label == Region::Achieved);
  CHECK(rc.margin == doctest::Approx(0.331004406410719).epsilon(1e-12));

  rc = classify_region(0.3, 0.8);
  CHECK(rc.label == Region::Zero);
  CHECK(rc.witness == doctest::Approx(-0.2).epsilon(1e-12));

  // Theorem 1's rectangle corner is not covered by the lemma condition
  rc = classify_region(0.1, 6.4);
  CHECK(rc.label == Region::Unknown);
  CHECK(rc.margin == doctest::Approx(-0.034428094887362).epsilon(1e-9));
  CHECK(rc.in_theorem1_rectangle);

  CHECK_FALSE(classify_region(0.1, 6.3).in_theorem1_rectangle);
  CHECK(classify_region(0.0, 1.0).label == Region::Zero);
}

TEST_CASE("achieved region has positive capacity") {
  for (int i = 1; i <= 200; ++i) {
    for (int j = 1; j <= 200; ++j) {
      const double p = 0.25 * i / 200.0;
      const double beta = 20.0 * j / 200.0;
      if (classify_region(p, beta).label == Region::Achieved) {
        CHECK(capacity_noisy_shuffle(p, beta) > 0.0);
      }
    }
  }
}

TEST_CASE("region boundary curve") {
  CHECK(region_boundary_beta(0.01) == doctest::Approx(2.329483395269011).epsilon(1e-9));
  // H(0) = 0 limit
  CHECK(region_boundary_beta(0.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::isinf(region_boundary_beta(0.25)));
  CHECK(std::isinf(region_boundary_beta(0.4)));
  // strictly increasing on (0, 0.25)
  double prev = region_boundary_beta(1e-4);
  for (int i = 1; i <= 200; ++i) {
    const double p = 1e-4 + (0.249 - 1e-4) * i / 200.0;
    const double cur = region_boundary_beta(p);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("region grid shape and content") {
  auto rows = region_grid(0.001, 0.25, 16, 0.5, 10.0, 20);
  CHECK(rows.size() == 16 * 20);
  for (const auto& row : rows) {
    if (row.beta <= 1.0) CHECK(row.label == Region::Zero);
    if (row.label == Region::Achieved) CHECK(row.margin > 0.0);
    CHECK(row.boundary_beta >= 2.0);
  }
  // serial and parallel grids agree exactly
  auto serial = region_grid(0.001, 0.25, 16, 0.5, 10.0, 20, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].p == serial[i].p);
    CHECK(rows[i].margin == serial[i].margin);
    CHECK(rows[i].label == serial[i].label);
  }

  const std::string csv = region_grid_csv(rows);
  CHECK(csv.rfind("schema_version,p,beta,region,margin,boundary_beta\n", 0) == 0);
}
