#pragma once

#include <string>
#include <vector>

#include "specmoore/graphs.hpp"
#include "specmoore/orthopoly.hpp"
#include "specmoore/quotient.hpp"

namespace specmoore {

// A polynomial stored over the F-basis: f = sum_i coeffs[i] * F_i.
struct FBasisPolynomial {
  int r = 3;
  std::vector<double> coeffs;

  double evaluate(double x) const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Exact change of basis (the F_i are monic, so back-substitution against the
// integer coefficient tables is exact).
FBasisPolynomial to_f_basis(int r, const std::vector<double>& monomial_coeffs);
std::vector<double> to_monomial(const FBasisPolynomial& f);

// The LP certificate behind the general quotient bound:
// f = (1/c) (x - lambda_2) prod_{i>=3} (x - lambda_i)^2 over the spectrum of
// T(r,t,c), expanded with compensated summation and converted to the F-basis.
// Satisfies f(r)/f_0 = the closed-form bound.
FBasisPolynomial theorem5_certificate(int r, int t, double c);

struct CertificateCondition {
  std::string name;
  bool satisfied = false;
  double witness = 0.0;  // the extremal value the check saw
};

struct CertificateReport {
  std::vector<CertificateCondition> conditions;
  double bound = 0.0;
  bool applicable = false;
};

// Hypotheses of the general LP bound: f(r) > 0, f(theta_i) <= 0 for the
// non-top distinct eigenvalues, f_0 > 0, f_i >= 0. Values within
// 1e-9 * max(1, |f(r)|) of a boundary count as satisfying it. Bound f(r)/f_0.
CertificateReport verify_general_lp(const FBasisPolynomial& f,
                                    const std::vector<double>& spectrum_values);

// Evaluators for the squared-variable families used on the bipartite side:
// calF0(i, y) = F_{2i}(sqrt(y)); calF1(i, y) = F_{2i+1}(sqrt(y))/sqrt(y).
// calF1 is housed for completeness; no theorem here consumes it.
double eval_calF0(const PolynomialFamily& fam, int i, double y);
double eval_calF1(const PolynomialFamily& fam, int i, double y);

// Monomial coefficients of calF0_i as a polynomial in y (exact integers).
std::vector<std::int64_t> calF0_monomial(const PolynomialFamily& fam, int i);

// Converts a polynomial in y from monomial coefficients to the calF0 basis.
std::vector<double> to_calF0_basis(int r, const std::vector<double>& monomial_y);

// Bipartite LP bound hypotheses for f = sum_j coeffs[j] * calF0_j against the
// squared spectrum {r^2 = tau_0^2 > tau_1^2 > ...}. Bound 2 f(r^2) / f_0.
CertificateReport verify_bipartite_lp(int r, const std::vector<double>& coeffs,
                                      const std::vector<double>& squared_spectrum);

struct EqualityCondition {
  std::string name;
  double value = 0.0;
  bool holds = false;
};

// Equality diagnostics for the bipartite LP bound on an actual graph: the
// traces tr(f_j calF0_j(N N^T)) and tr(f_j calF0_j(N^T N)) must vanish, and
// with all f_j > 0 the girth is at least 2t+2.
std::vector<EqualityCondition> bipartite_equality_diagnostics(
    const LabeledGraph& g, const std::vector<double>& coeffs);

}  // namespace specmoore
