#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "doctest.h"
#include "specmoore/bounds.hpp"
#include "specmoore/errors.hpp"
#include "specmoore/orthopoly.hpp"
#include "support/oracles.hpp"

using namespace specmoore;

namespace {

// Level sizes of the infinite r-regular tree: non-backtracking walks of
// length l from the root land on level l, one walk per level vertex.
std::int64_t tree_walk_count(int r, int len) {
  std::int64_t count = 1;
  for (int i = 0; i < len; ++i) count *= (i == 0) ? r : (r - 1);
  return count;
}

std::int64_t int_horner(const std::vector<std::int64_t>& coeffs, std::int64_t x) {
  std::int64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = checked_add(checked_mul(acc, x, "horner"), *it, "horner");
  }
  return acc;
}

}  // namespace

TEST_CASE("F evaluation matches the base cases and walk counts") {
  PolynomialFamily fam(3);
  CHECK(fam.eval_f(2, 0.0) == doctest::Approx(-3.0));
  CHECK(fam.eval_f(1, 7.0) == doctest::Approx(7.0));

  // F_4(3) counts non-backtracking walks of length 4 in the 3-regular tree.
  std::int64_t walks = tree_walk_count(3, 4);
  CHECK(walks == 24);
  CHECK(fam.eval_f(4, 3.0) == doctest::Approx(static_cast<double>(walks)));
}

TEST_CASE("G and H evaluation: fixed roots") {
  PolynomialFamily f3(3);
  CHECK(f3.eval_g(2, 1.0) == doctest::Approx(0.0));
  CHECK(f3.eval_h(2, std::sqrt(2.0)) == doctest::Approx(0.0).epsilon(1e-12));

  PolynomialFamily f4(4);
  CHECK(std::abs(f4.eval_g(3, 2.25342)) < 1e-3);
}

TEST_CASE("coefficient tables match the defining recurrences") {
  PolynomialFamily fam(3);
  CHECK(fam.coefficients_f(0) == std::vector<std::int64_t>{1});
  CHECK(fam.coefficients_f(1) == std::vector<std::int64_t>{0, 1});
  CHECK(fam.coefficients_f(2) == std::vector<std::int64_t>{-3, 0, 1});
  CHECK(fam.coefficients_f(3) == std::vector<std::int64_t>{0, -5, 0, 1});
  CHECK(fam.coefficients_g(2) == std::vector<std::int64_t>{-2, 1, 1});
  CHECK(fam.coefficients_h(2) == std::vector<std::int64_t>{-2, 0, 1});

  // coeffG[j] = sum of coeffF[0..j]; coeffH[j] = sum of coeffF[j-2i]
  for (int j = 0; j <= 10; ++j) {
    auto g = fam.coefficients_g(j);
    auto h = fam.coefficients_h(j);
    std::vector<std::int64_t> gsum(j + 1, 0), hsum(j + 1, 0);
    for (int i = 0; i <= j; ++i) {
      auto fi = fam.coefficients_f(i);
      for (std::size_t k = 0; k < fi.size(); ++k) gsum[k] += fi[k];
      if ((j - i) % 2 == 0) {
        for (std::size_t k = 0; k < fi.size(); ++k) hsum[k] += fi[k];
      }
    }
    CHECK(g == gsum);
    CHECK(h == hsum);
  }
}

TEST_CASE("recurrence and Horner evaluation agree at random points") {
  std::mt19937_64 rng(20240811);
  for (int r = 3; r <= 10; ++r) {
    PolynomialFamily fam(r);
    std::uniform_real_distribution<double> dist(-fam.two_sqrt_q(), fam.two_sqrt_q());
    for (int trial = 0; trial < 125; ++trial) {
      double x = dist(rng);
      for (int j = 0; j <= 12; ++j) {
        double a = fam.eval_f(j, x);
        double b = fam.eval_f_horner(j, x);
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
        double g1 = fam.eval_g(j, x);
        double g2 = fam.eval_g_horner(j, x);
        CHECK(std::abs(g1 - g2) <= 1e-9 * std::max(1.0, std::abs(g1)));
        double h1 = fam.eval_h(j, x);
        double h2 = fam.eval_h_horner(j, x);
        CHECK(std::abs(h1 - h2) <= 1e-9 * std::max(1.0, std::abs(h1)));
      }
    }
  }
}

TEST_CASE("exact identities at x = r") {
  for (int r = 3; r <= 10; ++r) {
    PolynomialFamily fam(r);
    for (int j = 1; j <= 12; ++j) {
      CHECK(int_horner(fam.coefficients_f(j), r) == fam.f_at_valency(j));
    }
    for (int d = 1; d <= 8; ++d) {
      CHECK(int_horner(fam.coefficients_g(d), r) == moore_bound(r, d));
      CHECK(fam.g_at_valency(d) == moore_bound(r, d));
    }
  }
}

TEST_CASE("H identity against F two degrees up (j >= 1)") {
  std::mt19937_64 rng(7);
  for (int r : {3, 5, 9}) {
    PolynomialFamily fam(r);
    std::uniform_real_distribution<double> dist(-fam.two_sqrt_q(), fam.two_sqrt_q());
    for (int j = 1; j <= 10; ++j) {
      for (int trial = 0; trial < 100; ++trial) {
        double x = dist(rng);
        double lhs = fam.eval_h(j, x) * (x * x - static_cast<double>(r) * r);
        double rhs = fam.eval_f(j + 2, x) -
                     static_cast<double>(r - 1) * (r - 1) * fam.eval_f(j, x);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}

TEST_CASE("largest roots: closed forms and tabulated values") {
  PolynomialFamily f8(8);
  double expected = (-1.0 + std::sqrt(29.0)) / 2.0;
  CHECK(largest_root(f8, RootFamily::G, 2).value == doctest::Approx(expected).epsilon(1e-12));

  PolynomialFamily f3(3);
  CHECK(largest_root(f3, RootFamily::F, 2).value ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(std::abs(largest_root(f3, RootFamily::G, 5).value - 2.39309) < 1e-5);
}

TEST_CASE("largest root records carry certified brackets") {
  for (int r : {3, 6, 10}) {
    PolynomialFamily fam(r);
    for (int t = 1; t <= 8; ++t) {
      RootRecord rec = largest_root(fam, RootFamily::G, t);
      CHECK(rec.hi - rec.lo <= rec.tol);
      CHECK(rec.lo <= rec.value);
      CHECK(rec.value <= rec.hi);
      double flo = fam.eval_g(t, rec.lo);
      double fhi = fam.eval_g(t, rec.hi);
      CHECK(((flo > 0) != (fhi > 0)));
    }
  }
}

TEST_CASE("largest root of combinations") {
  PolynomialFamily f3(3);
  CHECK(largest_root_of_combination(f3, RootFamily::CombinationG, 3, 1.0).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(largest_root_of_combination(f3, RootFamily::CombinationH, 4, 2.0).value ==
        doctest::Approx(1.0).epsilon(1e-12));

  PolynomialFamily f8(8);
  double v = largest_root_of_combination(f8, RootFamily::CombinationG, 3, 7.0 / 6.0).value;
  CHECK(std::abs(v - 2.09503) < 1e-5);
}

TEST_CASE("root ordering lambda^(t) < mu^(t)") {
  for (int r = 3; r <= 10; ++r) {
    PolynomialFamily fam(r);
    RootRecord l1 = largest_root(fam, RootFamily::G, 1);
    RootRecord m1 = largest_root(fam, RootFamily::F, 1);
    CHECK(l1.value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(m1.value == doctest::Approx(0.0).epsilon(1e-12));
    for (int t = 1; t <= 8; ++t) {
      double lam = largest_root(fam, RootFamily::G, t).value;
      double mu = largest_root(fam, RootFamily::F, t).value;
      CHECK(lam < mu);
      CHECK(mu < fam.two_sqrt_q());
    }
  }
}

TEST_CASE("Bannai-Ito window for lambda^(t)") {
  const double pi = 3.14159265358979323846;
  for (int r = 3; r <= 10; ++r) {
    PolynomialFamily fam(r);
    for (int t = 1; t <= 8; ++t) {
      double lam = largest_root(fam, RootFamily::G, t).value;
      CHECK(lam > fam.two_sqrt_q() * std::cos(pi / t));
      CHECK(lam < fam.two_sqrt_q() * std::cos(pi / (t + 1)));
    }
  }
}

TEST_CASE("roots of consecutive G polynomials interlace") {
  for (int r : {3, 7, 10}) {
    PolynomialFamily fam(r);
    for (int t = 2; t <= 8; ++t) {
      auto big = all_roots_g(fam, t);
      auto small = all_roots_g(fam, t - 1);
      REQUIRE(big.size() == static_cast<std::size_t>(t));
      REQUIRE(small.size() == static_cast<std::size_t>(t - 1));
      // verify each reported root by an independent sign change
      for (double root : big) {
        double eps = 1e-6;
        CHECK(((fam.eval_g(t, root - eps) > 0) != (fam.eval_g(t, root + eps) > 0)));
      }
      for (int i = 0; i + 1 < t; ++i) {
        CHECK(big[i] < small[i]);
        CHECK(small[i] < big[i + 1]);
      }
    }
  }
}

TEST_CASE("orthogonality defect oracle stays near zero") {
  PolynomialFamily f3(3);
  PolynomialFamily f4(4);
  CHECK(std::abs(orthogonality_defect(f3, 0, 1, 4096)) < 1e-3);
  CHECK(std::abs(orthogonality_defect(f3, 1, 2, 4096)) < 1e-3);
  CHECK(std::abs(orthogonality_defect(f4, 2, 3, 4096)) < 1e-3);
  // even-even pair, not settled by parity alone
  CHECK(std::abs(orthogonality_defect(f3, 0, 2, 4096)) < 1e-3);
  CHECK(std::abs(orthogonality_defect(f4, 2, 4, 4096)) < 1e-3);
}

TEST_CASE("argument validation and overflow reporting") {
  PolynomialFamily fam(12);
  CHECK_THROWS_AS((void)PolynomialFamily(2), Error);
  CHECK_THROWS_AS((void)orthogonality_defect(fam, 2, 2, 4096), Error);
  CHECK_THROWS_AS((void)orthogonality_defect(fam, 0, 1, 32), Error);
  CHECK_THROWS_AS((void)largest_root(fam, RootFamily::G, 0), Error);
  CHECK_THROWS_AS((void)largest_root_of_combination(fam, RootFamily::CombinationH, 3, 1.0), Error);

  try {
    (void)fam.coefficients_f(60);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("tables extend under one thread, evaluate under many") {
  PolynomialFamily fam(4);
  (void)fam.coefficients_f(12);  // warm-up extension
  std::vector<std::thread> workers;
  std::atomic<int> failures{0};
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&fam, &failures, w] {
      for (int i = 0; i < 200; ++i) {
        double x = 0.01 * ((i + w) % 100);
        double a = fam.eval_f(10, x);
        double b = fam.eval_f_horner(10, x);
        if (std::abs(a - b) > 1e-9 * std::max(1.0, std::abs(a))) ++failures;
      }
    });
  }
  for (auto& t : workers) t.join();
  CHECK(failures.load() == 0);
}
