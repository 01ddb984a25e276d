#include <cmath>
#include <random>

#include "doctest.h"
#include "specmoore/bounds.hpp"
#include "specmoore/errors.hpp"
#include "specmoore/table1.hpp"

using namespace specmoore;

TEST_CASE("moore bound closed forms") {
  for (int d = 1; d <= 10; ++d) CHECK(moore_bound(2, d) == 2 * d + 1);
  for (int r = 3; r <= 12; ++r) CHECK(moore_bound(r, 1) == r + 1);
  CHECK(moore_bound(3, 6) == 190);
  CHECK(moore_bound(7, 2) == 50);
  CHECK(moore_bound(3, 2) == 10);

  try {
    (void)moore_bound(10, 25);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("v_upper reproduces the known extremal values") {
  BoundResult petersen = v_upper(3, 1.0);
  CHECK(petersen.t == 3);
  CHECK(petersen.c == doctest::Approx(1.0));
  CHECK(petersen.bound == doctest::Approx(10.0));
  CHECK(petersen.floor_bound == 10);
  CHECK_FALSE(petersen.capped);

  BoundResult heawood = v_upper(3, std::sqrt(2.0));
  CHECK(heawood.t == 4);
  CHECK(heawood.c == doctest::Approx(3.0));
  CHECK(heawood.bound == doctest::Approx(14.0));
  CHECK(heawood.floor_bound == 14);

  BoundResult odd4 = v_upper(4, 2.0);
  CHECK(odd4.t == 4);
  CHECK(odd4.c == doctest::Approx(2.0));
  CHECK(odd4.bound == doctest::Approx(35.0));
  CHECK(odd4.floor_bound == 35);

  // the direct regime solve for (6, 2)
  BoundResult sixtwo = v_upper(6, 2.0);
  CHECK(sixtwo.t == 3);
  CHECK(sixtwo.c == doctest::Approx(2.0 / 3.0));
  CHECK(sixtwo.floor_bound == 52);
}

TEST_CASE("v_upper domain") {
  CHECK(v_upper(3, -1.0).floor_bound == 4);  // complete graph regime
  try {
    (void)v_upper(3, 2.0 * std::sqrt(2.0));
    FAIL("expected ThetaOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ThetaOutOfRange);
  }
  CHECK_THROWS_AS((void)v_upper(3, -1.0001), Error);
}

TEST_CASE("b_upper reproduces the bipartite extremal values") {
  BoundResult cube = b_upper(3, 1.0);
  CHECK(cube.t == 4);
  CHECK(cube.c == doctest::Approx(2.0));
  CHECK(cube.bound == doctest::Approx(8.0));
  CHECK(cube.floor_bound == 8);

  BoundResult heawood = b_upper(3, std::sqrt(2.0));
  CHECK(heawood.t == 4);
  CHECK(heawood.c == doctest::Approx(1.0));
  CHECK(heawood.bound == doctest::Approx(14.0));
  CHECK(heawood.floor_bound == 14);

  CHECK_THROWS_AS((void)b_upper(3, -0.5), Error);
  CHECK_THROWS_AS((void)b_upper(3, 3.0), Error);
}

TEST_CASE("bipartite floors are even") {
  std::mt19937_64 rng(99);
  const double pi = 3.14159265358979323846;
  for (int trial = 0; trial < 50; ++trial) {
    int r = 3 + static_cast<int>(rng() % 6);
    // stay below the t <= 40 scan window
    std::uniform_real_distribution<double> dist(
        0.0, 2.0 * std::sqrt(r - 1.0) * std::cos(pi / 37));
    BoundResult b = b_upper(r, dist(rng));
    CHECK(b.floor_bound % 2 == 0);
    CHECK(b.floor_bound <= b.bound + 1e-9 * std::max(1.0, b.bound));
  }
}

TEST_CASE("bipartite bound never exceeds the general bound") {
  std::mt19937_64 rng(123);
  const double pi = 3.14159265358979323846;
  for (int trial = 0; trial < 200; ++trial) {
    int r = 3 + static_cast<int>(rng() % 6);  // 3..8
    std::uniform_real_distribution<double> dist(
        0.0, 2.0 * std::sqrt(r - 1.0) * std::cos(pi / 37));
    double theta = dist(rng);
    BoundResult b = b_upper(r, theta);
    BoundResult v = v_upper(r, theta);
    CHECK(b.bound <= v.bound + 1e-9 * std::max(1.0, v.bound));
  }
}

TEST_CASE("v_upper round trip against the quotient lambda2") {
  for (int r : {3, 4, 5, 8}) {
    PolynomialFamily fam(r);
    for (int t = 3; t <= 6; ++t) {
      for (double c : {0.25, 0.5, 1.0, 1.5, 2.0, static_cast<double>(r)}) {
        QuotientSpec spec;
        spec.r = r;
        spec.t = t;
        spec.c = c;
        spec.kind = QuotientKind::General;
        double theta = lambda2_of_quotient(spec);
        double closed = static_cast<double>(fam.g_at_valency(t - 2)) +
                        static_cast<double>(fam.f_at_valency(t - 1)) / c;
        BoundResult res = v_upper(r, theta);
        // v_upper minimizes over regimes, so it can only improve on (t, c)
        CHECK(res.bound <= closed * (1 + 1e-9));
        if (c >= 1.0) {
          // the canonical regime: equality
          CHECK(res.bound == doctest::Approx(closed).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("b_upper round trip against the bipartite quotient lambda2") {
  for (int r : {3, 4, 5, 8}) {
    for (int t = 4; t <= 7; ++t) {
      for (double c : {1.0, 1.5, 2.0, static_cast<double>(r)}) {
        QuotientSpec spec;
        spec.r = r;
        spec.t = t;
        spec.c = c;
        spec.kind = QuotientKind::Bipartite;
        double theta = lambda2_of_quotient(spec);
        std::int64_t head = 0, pw = 1;
        for (int i = 0; i <= t - 4; ++i) {
          head += pw;
          pw *= (r - 1);
        }
        double closed = 2.0 * (head + (static_cast<double>(pw) + pw * (r - 1.0)) / c);
        BoundResult res = b_upper(r, theta);
        CHECK(res.bound <= closed * (1 + 1e-9));
        if (c >= 1.0) {
          CHECK(res.bound == doctest::Approx(closed).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("v_upper is nondecreasing in theta") {
  const double pi = 3.14159265358979323846;
  for (int r : {3, 4, 6}) {
    double top = std::min(2.0 * std::sqrt(r - 1.0) - 0.01,
                          2.0 * std::sqrt(r - 1.0) * std::cos(pi / 37));
    double prev = 0.0;
    bool first = true;
    for (double theta = -1.0; theta <= top; theta += 0.01) {
      double bound = v_upper(r, theta).bound;
      if (!first) CHECK(bound >= prev - 1e-9 * std::max(1.0, prev));
      prev = bound;
      first = false;
    }
  }
}

TEST_CASE("defect bound values") {
  CHECK(defect_bound(8, 2, 3.40512) == doctest::Approx(57.0).epsilon(1e-3));
  CHECK(defect_bound(4, 3, 2.88396) == doctest::Approx(41.0).epsilon(1e-2));

  // at the largest root of G_D the subtraction vanishes
  for (int r : {3, 5, 8}) {
    PolynomialFamily fam(r);
    for (int d : {2, 3, 4}) {
      double lam = largest_root(fam, RootFamily::G, d).value;
      CHECK(defect_bound(r, d, lam) ==
            doctest::Approx(static_cast<double>(moore_bound(r, d))).epsilon(1e-9));
    }
  }

  // small beta makes the bound worse than the plain Moore bound
  for (int r : {3, 6, 10}) {
    double worse = defect_bound(r, 2, 0.0);
    CHECK(worse == doctest::Approx(static_cast<double>(moore_bound(r, 2) + (r - 1))));
    CHECK(worse > moore_bound(r, 2));
  }
}

TEST_CASE("beta threshold reproduces the upper column") {
  CHECK(std::abs(beta_threshold(8, 2, 57) - 3.40512) < 1e-5);
  CHECK(std::abs(beta_threshold(3, 6, 132) - 2.75001) < 1e-5);
  CHECK(std::abs(beta_threshold(5, 4, 212) - 4.41922) < 1e-5);

  try {
    (void)beta_threshold(3, 2, 10);
    FAIL("expected NonPositiveDefect");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPositiveDefect);
  }
}

TEST_CASE("lower threshold reproduces the lower column") {
  CHECK(std::abs(lower_threshold(8, 57) - 2.09503) < 1e-5);
  CHECK(std::abs(lower_threshold(3, 70) - 2.32340) < 1e-5);
  CHECK(std::abs(lower_threshold(4, 364) - 2.89153) < 1e-5);

  try {
    (void)lower_threshold(3, 4);
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
}

TEST_CASE("search window assembles consistently") {
  DefectWindow w = search_window(3, 6, 132);
  CHECK(std::abs(w.lower_threshold - 2.45777) < 1e-5);
  CHECK(std::abs(w.lambda_d - 2.51283) < 1e-5);
  CHECK(std::abs(w.beta_threshold - 2.75001) < 1e-5);
  CHECK(w.moore == 190);
  CHECK(w.defect == 58);

  DefectWindow w2 = search_window(10, 2, 91);
  CHECK(std::abs(w2.lower_threshold - 2.46923) < 1e-5);
  CHECK(std::abs(w2.lambda_d - 2.54138) < 1e-5);
  // exact closed form for the level set G_2 = 10: (-1 + sqrt(77)) / 2
  CHECK(w2.beta_threshold ==
        doctest::Approx((-1.0 + std::sqrt(77.0)) / 2.0).epsilon(1e-9));

  DefectWindow w3 = search_window(4, 6, 740);
  CHECK(std::abs(w3.lower_threshold - 3.00233) < 1e-5);
  CHECK(std::abs(w3.lambda_d - 3.08314) < 1e-5);
  CHECK(std::abs(w3.beta_threshold - 3.73149) < 1e-5);

  CHECK(w.lower_threshold < w.lambda_d);
  CHECK(w.lambda_d < w.beta_threshold);
}

TEST_CASE("v_upper at lambda^(D) recovers the Moore bound") {
  for (int r : {3, 4, 7}) {
    PolynomialFamily fam(r);
    for (int d = 2; d <= 5; ++d) {
      double lam = largest_root(fam, RootFamily::G, d).value;
      BoundResult res = v_upper(r, lam);
      CHECK(res.bound ==
            doctest::Approx(static_cast<double>(moore_bound(r, d))).epsilon(1e-9));
    }
  }
}

TEST_CASE("alon boppana comparison") {
  CHECK(alon_boppana_moore_bound(3, 2) == 22);
  CHECK(alon_boppana_moore_bound(4, 2) == 53);

  // the regime bound beats the diameter-based cutoff
  double theta = std::sqrt(2.0) - 1e-6;  // just under 2 sqrt(2) cos(pi/3)
  CHECK(v_upper(3, theta).bound <= 22.0);
  CHECK(v_upper(4, std::sqrt(3.0)).bound < 53.0);
}

TEST_CASE("table rows recompute under the frozen rounding convention") {
  for (const auto& row : compute_table1()) {
    CHECK(row.lower_match);
    CHECK(row.moore_match);
    CHECK(row.upper_match);
  }
  // the single flagged cell: printed value fails its own defining equation
  const Table1Reference* row = table1_find(10, 2);
  REQUIRE(row != nullptr);
  CHECK(row->upper_erratum);
  CHECK(std::string(row->upper_corrected) ==
        format_5dp((-1.0 + std::sqrt(77.0)) / 2.0));
}
