#include "specmoore/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specmoore/errors.hpp"

namespace specmoore {

namespace {

// poly *= (x - root), coefficients constant-first. Each output coefficient
// is a fused two-term combination, which keeps repeated expansion of the
// double roots well conditioned at desk-scale degrees.
std::vector<double> multiply_linear(const std::vector<double>& poly, double root) {
  std::vector<double> out(poly.size() + 1, 0.0);
  out[poly.size()] = poly.back();
  for (std::size_t i = poly.size() - 1; i >= 1; --i) {
    out[i] = std::fma(-root, poly[i], poly[i - 1]);
  }
  out[0] = -root * poly[0];
  return out;
}

}  // namespace

double FBasisPolynomial::evaluate(double x) const {
  PolynomialFamily fam(r);
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0.0) acc += coeffs[i] * fam.eval_f(static_cast<int>(i), x);
  }
  return acc;
}

FBasisPolynomial to_f_basis(int r, const std::vector<double>& monomial_coeffs) {
  if (monomial_coeffs.empty()) {
    fail(ErrorKind::InvalidArgument, "empty coefficient list");
  }
  PolynomialFamily fam(r);
  const int n = static_cast<int>(monomial_coeffs.size()) - 1;
  std::vector<double> residual = monomial_coeffs;
  std::vector<double> f(n + 1, 0.0);
  for (int j = n; j >= 0; --j) {
    f[j] = residual[j];  // F_j is monic
    if (f[j] == 0.0) continue;
    auto fj = fam.coefficients_f(j);
    for (int k = 0; k <= j; ++k) {
      residual[k] -= f[j] * static_cast<double>(fj[k]);
    }
  }
  return FBasisPolynomial{r, std::move(f)};
}

std::vector<double> to_monomial(const FBasisPolynomial& f) {
  PolynomialFamily fam(f.r);
  std::vector<double> out(f.coeffs.size(), 0.0);
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
    if (f.coeffs[j] == 0.0) continue;
    auto fj = fam.coefficients_f(static_cast<int>(j));
    for (std::size_t k = 0; k < fj.size(); ++k) {
      out[k] += f.coeffs[j] * static_cast<double>(fj[k]);
    }
  }
  return out;
}

FBasisPolynomial theorem5_certificate(int r, int t, double c) {
  QuotientSpec spec;
  spec.r = r;
  spec.t = t;
  spec.c = c;
  spec.kind = QuotientKind::General;
  SpectrumSummary s = spectrum(spec);
  std::vector<double> eig = s.flat();  // descending, lambda_1 = r first

  std::vector<double> poly = {1.0};
  if (eig.size() >= 2) poly = multiply_linear(poly, eig[1]);
  for (std::size_t i = 2; i < eig.size(); ++i) {
    poly = multiply_linear(poly, eig[i]);
    poly = multiply_linear(poly, eig[i]);
  }
  for (double& v : poly) v /= c;
  return to_f_basis(r, poly);
}

namespace {

CertificateReport build_report(double f_at_top, double worst_spectrum_value,
                               double f0, double min_coeff, double bound_scale) {
  CertificateReport report;
  const double tol = 1e-9 * std::max(1.0, std::abs(f_at_top));
  report.conditions.push_back({"f(top) > 0", f_at_top > 0, f_at_top});
  report.conditions.push_back({"f(theta_i) <= 0 for non-top eigenvalues",
                               worst_spectrum_value <= tol, worst_spectrum_value});
  report.conditions.push_back({"f_0 > 0", f0 > 0, f0});
  report.conditions.push_back({"f_i >= 0", min_coeff >= -tol, min_coeff});
  report.applicable = true;
  for (const auto& c : report.conditions) report.applicable &= c.satisfied;
  report.bound = (f0 != 0.0) ? bound_scale * f_at_top / f0 : 0.0;
  return report;
}

}  // namespace

CertificateReport verify_general_lp(const FBasisPolynomial& f,
                                    const std::vector<double>& spectrum_values) {
  if (f.coeffs.empty()) fail(ErrorKind::InvalidArgument, "empty certificate");
  if (spectrum_values.empty()) {
    fail(ErrorKind::MalformedSpectrum, "need at least the top eigenvalue");
  }
  for (std::size_t i = 1; i < spectrum_values.size(); ++i) {
    if (!(spectrum_values[i] < spectrum_values[i - 1])) {
      fail(ErrorKind::MalformedSpectrum,
           "distinct eigenvalues must be strictly descending");
    }
  }
  const double top = spectrum_values.front();
  double f_top = f.evaluate(top);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < spectrum_values.size(); ++i) {
    worst = std::max(worst, f.evaluate(spectrum_values[i]));
  }
  if (spectrum_values.size() == 1) worst = 0.0;
  double min_coeff = f.coeffs[0];
  for (double v : f.coeffs) min_coeff = std::min(min_coeff, v);
  return build_report(f_top, worst, f.coeffs[0], min_coeff, 1.0);
}

double eval_calF0(const PolynomialFamily& fam, int i, double y) {
  if (y < 0) fail(ErrorKind::NegativeSquaredEigenvalue, "calF0 needs y >= 0");
  return fam.eval_f(2 * i, std::sqrt(y));
}

double eval_calF1(const PolynomialFamily& fam, int i, double y) {
  if (y < 0) fail(ErrorKind::NegativeSquaredEigenvalue, "calF1 needs y >= 0");
  if (y == 0.0) {
    // F_{2i+1} is odd; the ratio at zero is its linear coefficient.
    auto coeffs = fam.coefficients_f(2 * i + 1);
    return static_cast<double>(coeffs[1]);
  }
  double x = std::sqrt(y);
  return fam.eval_f(2 * i + 1, x) / x;
}

std::vector<std::int64_t> calF0_monomial(const PolynomialFamily& fam, int i) {
  // F_{2i} is even; its even-index coefficients are the y-coefficients.
  auto full = fam.coefficients_f(2 * i);
  std::vector<std::int64_t> out(static_cast<std::size_t>(i) + 1, 0);
  for (std::size_t k = 0; k < full.size(); k += 2) out[k / 2] = full[k];
  return out;
}

std::vector<double> to_calF0_basis(int r, const std::vector<double>& monomial_y) {
  if (monomial_y.empty()) fail(ErrorKind::InvalidArgument, "empty coefficient list");
  PolynomialFamily fam(r);
  const int n = static_cast<int>(monomial_y.size()) - 1;
  std::vector<double> residual = monomial_y;
  std::vector<double> f(n + 1, 0.0);
  for (int j = n; j >= 0; --j) {
    f[j] = residual[j];  // calF0_j is monic in y
    if (f[j] == 0.0) continue;
    auto fj = calF0_monomial(fam, j);
    for (int k = 0; k <= j; ++k) residual[k] -= f[j] * static_cast<double>(fj[k]);
  }
  return f;
}

CertificateReport verify_bipartite_lp(int r, const std::vector<double>& coeffs,
                                      const std::vector<double>& squared_spectrum) {
  if (coeffs.empty()) fail(ErrorKind::InvalidArgument, "empty certificate");
  if (squared_spectrum.empty()) {
    fail(ErrorKind::MalformedSpectrum, "need at least r^2 in the squared spectrum");
  }
  for (double v : squared_spectrum) {
    if (v < 0) {
      fail(ErrorKind::NegativeSquaredEigenvalue,
           "squared spectrum contains " + std::to_string(v));
    }
  }
  for (std::size_t i = 1; i < squared_spectrum.size(); ++i) {
    if (!(squared_spectrum[i] < squared_spectrum[i - 1])) {
      fail(ErrorKind::MalformedSpectrum,
           "squared spectrum must be strictly descending");
    }
  }
  const double top = squared_spectrum.front();
  if (std::abs(top - static_cast<double>(r) * r) > 1e-7 * r * r) {
    fail(ErrorKind::MalformedSpectrum, "squared spectrum must start at r^2");
  }
  PolynomialFamily fam(r);
  auto eval = [&](double y) {
    double acc = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] != 0.0) acc += coeffs[j] * eval_calF0(fam, static_cast<int>(j), y);
    }
    return acc;
  };
  double f_top = eval(top);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < squared_spectrum.size(); ++i) {
    worst = std::max(worst, eval(squared_spectrum[i]));
  }
  if (squared_spectrum.size() == 1) worst = 0.0;
  double min_coeff = coeffs[0];
  for (double v : coeffs) min_coeff = std::min(min_coeff, v);
  return build_report(f_top, worst, coeffs[0], min_coeff, 2.0);
}

std::vector<EqualityCondition> bipartite_equality_diagnostics(
    const LabeledGraph& g, const std::vector<double>& coeffs) {
  if (!g.is_connected()) {
    fail(ErrorKind::NotConnected, "equality diagnostics need a connected graph");
  }
  int r = g.regular_degree();
  if (r < 3) {
    fail(ErrorKind::NotApplicable,
         "bipartite LP bound needs r >= 3 (got r = " + std::to_string(r) + ")");
  }
  auto coloring = g.bipartition();
  if (!coloring) fail(ErrorKind::NotBipartite, "graph is not bipartite");

  std::vector<int> side_a, side_b;
  for (int v = 0; v < g.order(); ++v) {
    ((*coloring)[v] == 0 ? side_a : side_b).push_back(v);
  }
  Matrix nmat(static_cast<int>(side_a.size()), static_cast<int>(side_b.size()));
  for (std::size_t i = 0; i < side_a.size(); ++i) {
    for (std::size_t j = 0; j < side_b.size(); ++j) {
      if (g.has_edge(side_a[i], side_b[j])) nmat.at(static_cast<int>(i), static_cast<int>(j)) = 1.0;
    }
  }
  Matrix nnt = nmat * nmat.transpose();
  Matrix ntn = nmat.transpose() * nmat;

  PolynomialFamily fam(r);
  auto poly_of_matrix = [](const std::vector<std::int64_t>& ycoeffs, const Matrix& m) {
    Matrix acc(m.rows(), m.cols());
    for (auto it = ycoeffs.rbegin(); it != ycoeffs.rend(); ++it) {
      acc = acc * m;
      for (int d = 0; d < m.rows(); ++d) acc.at(d, d) += static_cast<double>(*it);
    }
    return acc;
  };
  auto trace = [](const Matrix& m) {
    double t = 0.0;
    for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
  };

  std::vector<EqualityCondition> out;
  const double tol = 1e-7;
  int t_max = 0;
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0.0) t_max = static_cast<int>(j);
  }
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    auto yc = calF0_monomial(fam, static_cast<int>(j));
    double tr_a = coeffs[j] * trace(poly_of_matrix(yc, nnt));
    double tr_b = coeffs[j] * trace(poly_of_matrix(yc, ntn));
    out.push_back({"tr(f_" + std::to_string(j) + " calF0_" + std::to_string(j) + "(NN^T)) = 0",
                   tr_a, std::abs(tr_a) <= tol});
    out.push_back({"tr(f_" + std::to_string(j) + " calF0_" + std::to_string(j) + "(N^TN)) = 0",
                   tr_b, std::abs(tr_b) <= tol});
  }

  // Squared-spectrum equality f(tau_i^2) = 0 for the graph's own eigenvalues.
  auto eval = [&](double y) {
    double acc = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] != 0.0) acc += coeffs[j] * eval_calF0(fam, static_cast<int>(j), y);
    }
    return acc;
  };
  std::vector<double> squared;
  for (double v : g.cached_spectrum().distinct_values()) {
    double y = v * v;
    bool dup = false;
    for (double s : squared) dup |= std::abs(s - y) <= 1e-7;
    if (!dup) squared.push_back(y);
  }
  std::sort(squared.begin(), squared.end(), std::greater<double>());
  for (double y : squared) {
    if (std::abs(y - static_cast<double>(r) * r) <= 1e-7) continue;
    double v = eval(y);
    out.push_back({"f(" + std::to_string(y) + ") = 0", v, std::abs(v) <= tol});
  }

  bool all_positive = t_max >= 1;
  for (int j = 1; j <= t_max; ++j) {
    all_positive &= j < static_cast<int>(coeffs.size()) && coeffs[j] > 0;
  }
  GraphMetrics metrics = diameter_and_girth(g);
  int needed = 2 * t_max + 2;
  EqualityCondition girth_cond;
  girth_cond.name = "girth >= " + std::to_string(needed) +
                    (all_positive ? " (all f_j > 0)" : " (not implied: some f_j = 0)");
  girth_cond.value = metrics.girth;
  girth_cond.holds = !all_positive || metrics.girth >= needed;
  out.push_back(girth_cond);
  return out;
}

}  // namespace specmoore
