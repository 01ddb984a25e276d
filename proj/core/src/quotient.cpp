#include "specmoore/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specmoore/errors.hpp"

namespace specmoore {

namespace {

constexpr double kGroupingGap = 1e-7;
constexpr double kCrossCheckTol = 1e-8;

bool is_bipartite_c_equal_r(const QuotientSpec& spec) {
  return spec.kind == QuotientKind::Bipartite &&
         std::abs(spec.c - spec.r) <= 1e-12 * spec.r;
}

}  // namespace

std::string QuotientSpec::describe() const {
  std::string k = kind == QuotientKind::General ? "T" : "B";
  std::string cs = c_exact ? c_exact->str() : std::to_string(c);
  return k + "(" + std::to_string(r) + "," + std::to_string(t) + "," + cs + ")";
}

void validate(const QuotientSpec& spec) {
  if (spec.r < 3) {
    fail(ErrorKind::InvalidSpec,
         spec.describe() + ": valency must be at least 3");
  }
  if (!(spec.c > 0)) {
    fail(ErrorKind::InvalidSpec, spec.describe() + ": c must be positive");
  }
  if (spec.c > spec.r + 1e-12 * spec.r) {
    fail(ErrorKind::InvalidSpec,
         spec.describe() + ": c must not exceed the valency r");
  }
  if (spec.kind == QuotientKind::General) {
    if (spec.t < 2) {
      fail(ErrorKind::InvalidSpec, spec.describe() + ": general kind needs t >= 2");
    }
  } else {
    if (spec.t == 3) {
      if (std::abs(spec.c - 1.0) > 1e-12) {
        fail(ErrorKind::InvalidSpec,
             spec.describe() + ": bipartite t = 3 is only meaningful at c = 1");
      }
    } else if (spec.t < 4) {
      fail(ErrorKind::InvalidSpec, spec.describe() + ": bipartite kind needs t >= 4");
    }
  }
}

int SpectrumSummary::size() const {
  int n = 0;
  for (const auto& g : eigenvalues) n += g.multiplicity;
  return n;
}

std::vector<double> SpectrumSummary::flat() const {
  std::vector<double> out;
  out.reserve(size());
  for (const auto& g : eigenvalues) {
    for (int i = 0; i < g.multiplicity; ++i) out.push_back(g.value);
  }
  return out;
}

std::vector<double> SpectrumSummary::distinct_values() const {
  std::vector<double> out;
  out.reserve(eigenvalues.size());
  for (const auto& g : eigenvalues) out.push_back(g.value);
  return out;
}

SpectrumSummary summarize_spectrum(std::vector<double> descending) {
  if (descending.empty()) {
    fail(ErrorKind::InvalidArgument, "empty eigenvalue list");
  }
  std::sort(descending.begin(), descending.end(), std::greater<double>());
  SpectrumSummary s;
  for (double v : descending) {
    if (!s.eigenvalues.empty() &&
        std::abs(s.eigenvalues.back().value - v) <= kGroupingGap) {
      ++s.eigenvalues.back().multiplicity;
    } else {
      s.eigenvalues.push_back({v, 1});
    }
  }
  s.lambda1 = descending.front();
  s.lambda2 = descending.size() > 1 ? descending[1] : descending.front();
  s.lambda_min = descending.back();
  s.beta = std::max(std::abs(s.lambda2), std::abs(s.lambda_min));
  return s;
}

Matrix build_quotient(const QuotientSpec& spec) {
  validate(spec);
  const int t = spec.t;
  const double r = spec.r;
  const double c = spec.c;
  Matrix m(t, t);
  if (spec.kind == QuotientKind::General) {
    for (int i = 0; i + 1 < t; ++i) {
      m.at(i, i + 1) = (i == 0) ? r : r - 1;
      m.at(i + 1, i) = (i + 1 == t - 1) ? c : 1.0;
    }
    m.at(t - 1, t - 1) = r - c;
  } else {
    for (int i = 0; i + 1 < t; ++i) {
      double upper = (i == 0) ? r : (i + 1 == t - 1 ? r - c : r - 1);
      double lower = (i + 1 == t - 1) ? r : (i + 1 == t - 2 ? c : 1.0);
      m.at(i, i + 1) = upper;
      m.at(i + 1, i) = lower;
    }
  }
  return m;
}

std::vector<double> eigenvalues_by_factorization(const QuotientSpec& spec,
                                                 double tol) {
  validate(spec);
  PolynomialFamily fam(spec.r);
  std::vector<double> eig;

  if (spec.kind == QuotientKind::General) {
    eig = all_roots_g_combination(fam, spec.t, spec.c, tol);
    eig.push_back(static_cast<double>(spec.r));
  } else if (is_bipartite_c_equal_r(spec)) {
    // H_{t-2} + (r-1) H_{t-4} = x H_{t-3}: same spectrum as B(r,t-1,1)
    // plus a zero eigenvalue.
    QuotientSpec renamed = spec;
    renamed.t = spec.t - 1;
    renamed.c = 1.0;
    renamed.c_exact = Rational(1, 1);
    eig = eigenvalues_by_factorization(renamed, tol);
    eig.push_back(0.0);
  } else {
    if (spec.t == 3) {
      // charpoly (x^2 - r^2) x
      eig = {0.0};
    } else {
      eig = all_roots_h_combination(fam, spec.t, spec.c, tol);
    }
    eig.push_back(static_cast<double>(spec.r));
    eig.push_back(-static_cast<double>(spec.r));
  }
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

std::vector<double> eigenvalues_by_jacobi(const QuotientSpec& spec) {
  validate(spec);
  if (is_bipartite_c_equal_r(spec)) {
    // r(r-c) = 0 kills the diagonal symmetrization; use the renaming.
    QuotientSpec renamed = spec;
    renamed.t = spec.t - 1;
    renamed.c = 1.0;
    renamed.c_exact = Rational(1, 1);
    std::vector<double> eig = eigenvalues_by_jacobi(renamed);
    eig.push_back(0.0);
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
  }
  Matrix m = build_quotient(spec);
  const int t = spec.t;
  // All subdiagonal/superdiagonal products are positive for 0 < c < r, so a
  // diagonal similarity makes the matrix symmetric with off-diagonal entries
  // sqrt(lower * upper).
  Matrix s(t, t);
  for (int i = 0; i < t; ++i) s.at(i, i) = m.at(i, i);
  for (int i = 0; i + 1 < t; ++i) {
    double prod = m.at(i, i + 1) * m.at(i + 1, i);
    if (!(prod > 0)) {
      fail(ErrorKind::InvalidSpec,
           spec.describe() + ": off-diagonal product not positive, cannot symmetrize");
    }
    double off = std::sqrt(prod);
    s.at(i, i + 1) = off;
    s.at(i + 1, i) = off;
  }
  return jacobi_eigenvalues(std::move(s));
}

SpectrumSummary spectrum(const QuotientSpec& spec) {
  std::vector<double> primary = eigenvalues_by_factorization(spec);
  std::vector<double> check = eigenvalues_by_jacobi(spec);
  if (primary.size() != check.size()) {
    fail(ErrorKind::CrossCheckFailure,
         spec.describe() + ": eigenvalue count mismatch between routes");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < primary.size(); ++i) {
    worst = std::max(worst, std::abs(primary[i] - check[i]));
  }
  if (worst > kCrossCheckTol) {
    fail(ErrorKind::CrossCheckFailure,
         spec.describe() + ": polynomial and Jacobi eigenvalues differ by " +
             std::to_string(worst));
  }
  return summarize_spectrum(std::move(primary));
}

double lambda2_of_quotient(const QuotientSpec& spec) {
  return spectrum(spec).lambda2;
}

}  // namespace specmoore
