#include <algorithm>
#include <cmath>
#include <functional>

#include "doctest.h"
#include "specmoore/errors.hpp"
#include "specmoore/quotient.hpp"

using namespace specmoore;

namespace {

QuotientSpec make(int r, int t, double c, QuotientKind kind) {
  QuotientSpec s;
  s.r = r;
  s.t = t;
  s.c = c;
  s.kind = kind;
  return s;
}

const double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("build_quotient lays out the tridiagonals") {
  Matrix t = build_quotient(make(8, 2, 3, QuotientKind::General));
  CHECK(t.at(0, 0) == 0);
  CHECK(t.at(0, 1) == 8);
  CHECK(t.at(1, 0) == 3);
  CHECK(t.at(1, 1) == 5);

  Matrix b = build_quotient(make(3, 4, 1, QuotientKind::Bipartite));
  double expected[4][4] = {
      {0, 3, 0, 0}, {1, 0, 2, 0}, {0, 1, 0, 2}, {0, 0, 3, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(b.at(i, j) == expected[i][j]);

  Matrix g = build_quotient(make(6, 3, 2.0 / 3.0, QuotientKind::General));
  CHECK(g.at(0, 1) == 6);
  CHECK(g.at(1, 0) == 1);
  CHECK(g.at(1, 2) == 5);
  CHECK(g.at(2, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(g.at(2, 2) == doctest::Approx(16.0 / 3.0));
}

TEST_CASE("row sums equal r") {
  // exact for dyadic c, within rounding for other rationals
  for (double c : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    Matrix m = build_quotient(make(3, 5, c, QuotientKind::General));
    for (int i = 0; i < 5; ++i) {
      double sum = 0;
      for (int j = 0; j < 5; ++j) sum += m.at(i, j);
      CHECK(sum == 3.0);
    }
  }
  Matrix m = build_quotient(make(6, 4, 2.0 / 3.0, QuotientKind::Bipartite));
  for (int i = 0; i < 4; ++i) {
    double sum = 0;
    for (int j = 0; j < 4; ++j) sum += m.at(i, j);
    CHECK(sum == doctest::Approx(6.0).epsilon(1e-14));
  }
}

TEST_CASE("spectra of the small reference quotients") {
  SpectrumSummary s = spectrum(make(8, 2, 3, QuotientKind::General));
  REQUIRE(s.eigenvalues.size() == 2);
  CHECK(s.eigenvalues[0].value == doctest::Approx(8.0));
  CHECK(s.eigenvalues[1].value == doctest::Approx(-3.0));

  s = spectrum(make(3, 3, 1, QuotientKind::General));
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(s.eigenvalues[0].value == doctest::Approx(3.0));
  CHECK(s.eigenvalues[1].value == doctest::Approx(1.0));
  CHECK(s.eigenvalues[2].value == doctest::Approx(-2.0));

  s = spectrum(make(3, 4, 1, QuotientKind::Bipartite));
  REQUIRE(s.eigenvalues.size() == 4);
  CHECK(s.eigenvalues[0].value == doctest::Approx(3.0));
  CHECK(s.eigenvalues[1].value == doctest::Approx(std::sqrt(2.0)));
  CHECK(s.eigenvalues[2].value == doctest::Approx(-std::sqrt(2.0)));
  CHECK(s.eigenvalues[3].value == doctest::Approx(-3.0));
  CHECK(s.lambda2 == doctest::Approx(std::sqrt(2.0)));
  CHECK(s.beta == doctest::Approx(3.0));
}

TEST_CASE("c above the valency is rejected") {
  CHECK_THROWS_AS((void)spectrum(make(3, 2, 5, QuotientKind::General)), Error);
  try {
    (void)build_quotient(make(3, 2, 5, QuotientKind::General));
    FAIL("expected InvalidSpec");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSpec);
  }
}

TEST_CASE("lambda2 equals the combination root across the grid") {
  for (int r : {3, 4, 5, 8}) {
    PolynomialFamily fam(r);
    for (int t = 3; t <= 6; ++t) {
      for (double c : {0.25, 0.5, 1.0, 1.5, 2.0, static_cast<double>(r)}) {
        double viaspec = lambda2_of_quotient(make(r, t, c, QuotientKind::General));
        double viaroot =
            largest_root_of_combination(fam, RootFamily::CombinationG, t, c).value;
        CHECK(std::abs(viaspec - viaroot) <= 1e-10 * std::max(1.0, std::abs(viaroot)));
      }
    }
  }
}

TEST_CASE("factorization and Jacobi eigenvalues agree on the full grid") {
  for (int r : {3, 4, 5, 8}) {
    for (double c : {0.25, 0.5, 1.0, 1.5, 2.0, static_cast<double>(r)}) {
      for (int t = 2; t <= 6; ++t) {
        QuotientSpec spec = make(r, t, c, QuotientKind::General);
        auto a = eigenvalues_by_factorization(spec);
        auto b = eigenvalues_by_jacobi(spec);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          CHECK(std::abs(a[i] - b[i]) <= 1e-8);
        }
      }
      for (int t = 4; t <= 7; ++t) {
        QuotientSpec spec = make(r, t, c, QuotientKind::Bipartite);
        auto a = eigenvalues_by_factorization(spec);
        auto b = eigenvalues_by_jacobi(spec);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          CHECK(std::abs(a[i] - b[i]) <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("lambda2 is strictly decreasing in c") {
  for (int r : {3, 5, 10}) {
    for (int t = 3; t <= 6; ++t) {
      double prev = 1e300;
      for (double c = 0.1; c <= r + 1e-9; c += 0.3) {
        double lam = lambda2_of_quotient(make(r, t, std::min(c, double(r)), QuotientKind::General));
        CHECK(lam < prev);
        prev = lam;
      }
    }
  }
}

TEST_CASE("lambda2 endpoints: c = 1 gives lambda^(t-1), any c stays above lambda^(t-2)") {
  for (int r : {3, 6, 9}) {
    PolynomialFamily fam(r);
    for (int t = 3; t <= 6; ++t) {
      double at_one = lambda2_of_quotient(make(r, t, 1.0, QuotientKind::General));
      double lam_t1 = largest_root(fam, RootFamily::G, t - 1).value;
      CHECK(std::abs(at_one - lam_t1) <= 1e-10 * std::max(1.0, std::abs(lam_t1)));
      if (t >= 4) {
        double lam_t2 = largest_root(fam, RootFamily::G, t - 2).value;
        for (double c : {0.3, 1.0, 2.5, static_cast<double>(r)}) {
          CHECK(lambda2_of_quotient(make(r, t, c, QuotientKind::General)) > lam_t2);
        }
      }
    }
  }
}

TEST_CASE("eigenvalues are pairwise distinct for 0 < c < r") {
  for (int r : {3, 5}) {
    for (int t : {3, 4, 5, 6}) {
      for (double c : {0.5, 1.0, 2.0}) {
        auto eig = eigenvalues_by_factorization(make(r, t, c, QuotientKind::General));
        for (std::size_t i = 1; i < eig.size(); ++i) {
          CHECK(eig[i - 1] - eig[i] > 1e-9);
        }
      }
    }
  }
}

TEST_CASE("bipartite c = r renames one size down plus a zero eigenvalue") {
  SpectrumSummary s = spectrum(make(3, 4, 3, QuotientKind::Bipartite));
  auto flat = s.flat();
  REQUIRE(flat.size() == 4);
  CHECK(flat[0] == doctest::Approx(3.0));
  CHECK(flat[1] == doctest::Approx(0.0));
  CHECK(flat[2] == doctest::Approx(0.0));
  CHECK(flat[3] == doctest::Approx(-3.0));

  for (int r : {3, 5}) {
    for (int t : {5, 6, 7}) {
      auto full = eigenvalues_by_factorization(make(r, t, r, QuotientKind::Bipartite));
      auto renamed = eigenvalues_by_factorization(make(r, t - 1, 1, QuotientKind::Bipartite));
      renamed.push_back(0.0);
      std::sort(renamed.begin(), renamed.end(), std::greater<double>());
      REQUIRE(full.size() == renamed.size());
      for (std::size_t i = 0; i < full.size(); ++i) {
        CHECK(full[i] == doctest::Approx(renamed[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("bipartite t = 3 exists only at c = 1") {
  SpectrumSummary s = spectrum(make(5, 3, 1, QuotientKind::Bipartite));
  auto flat = s.flat();
  REQUIRE(flat.size() == 3);
  CHECK(flat[0] == doctest::Approx(5.0));
  CHECK(flat[1] == doctest::Approx(0.0));
  CHECK(flat[2] == doctest::Approx(-5.0));
  CHECK_THROWS_AS((void)spectrum(make(5, 3, 2, QuotientKind::Bipartite)), Error);
}

TEST_CASE("bipartite lambda2 at c = 1 matches the cosine closed form") {
  for (int r = 3; r <= 8; ++r) {
    for (int ell = 2; ell <= 6; ++ell) {
      double lam = lambda2_of_quotient(make(r, ell + 1, 1, QuotientKind::Bipartite));
      double target = 2.0 * std::sqrt(r - 1.0) * std::cos(kPi / ell);
      CHECK(std::abs(lam - target) <= 1e-9 * std::max(1.0, target));
    }
  }
}

TEST_CASE("general t = 2 spectrum is {r, -c}, flagged extrapolated upstream") {
  SpectrumSummary s = spectrum(make(7, 2, 1.5, QuotientKind::General));
  auto flat = s.flat();
  REQUIRE(flat.size() == 2);
  CHECK(flat[0] == doctest::Approx(7.0));
  CHECK(flat[1] == doctest::Approx(-1.5));
}
