#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specmoore/matrix.hpp"
#include "specmoore/orthopoly.hpp"
#include "specmoore/rational.hpp"

namespace specmoore {

enum class QuotientKind { General, Bipartite };

// Parameters of the tridiagonal quotient matrices. General kind needs
// t >= 2 (t = 2 is outside the theorem statements and flagged as
// extrapolated); bipartite needs t >= 4, except t = 3 with c = 1 where the
// undefined H_{t-4} term has zero coefficient. Always 0 < c <= r.
struct QuotientSpec {
  int r = 3;
  int t = 3;
  double c = 1.0;
  QuotientKind kind = QuotientKind::General;
  std::optional<Rational> c_exact;  // set when c was given as p/q

  std::string describe() const;
};

void validate(const QuotientSpec& spec);

struct EigenvalueGroup {
  double value = 0.0;
  int multiplicity = 1;
};

struct SpectrumSummary {
  std::vector<EigenvalueGroup> eigenvalues;  // descending
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  double beta = 0.0;  // max(|lambda2|, |lambda_min|)

  int size() const;
  std::vector<double> flat() const;            // with multiplicity, descending
  std::vector<double> distinct_values() const;  // descending
};

// Groups a descending eigenvalue list into multiplicity classes (gap
// threshold 1e-7) and fills the summary fields.
SpectrumSummary summarize_spectrum(std::vector<double> descending);

// The dense t x t quotient matrix. General: subdiagonal (1,..,1,c), zero
// diagonal except the (t,t) entry r-c, superdiagonal (r, r-1,..,r-1).
// Bipartite: lower diagonal (1,..,1,c,r), upper (r, r-1,..,r-1, r-c), zero
// diagonal. Every row sums to r.
Matrix build_quotient(const QuotientSpec& spec);

// All t eigenvalues. Primary route: the factored characteristic polynomial
// ((x-r)(G_{t-1}+(c-1)G_{t-2}) or (x^2-r^2)(H_{t-2}+(c-1)H_{t-4})), roots
// isolated with certified brackets. Cross-check: cyclic Jacobi on the
// diagonally symmetrized tridiagonal matrix; the routes must agree to 1e-8
// or CrossCheckFailure is raised. The degenerate bipartite c = r case uses
// the equality renaming spectrum(B(r,t,r)) = spectrum(B(r,t-1,1)) + {0}.
SpectrumSummary spectrum(const QuotientSpec& spec);

double lambda2_of_quotient(const QuotientSpec& spec);

// The two eigenvalue routes, exposed separately for verification suites.
std::vector<double> eigenvalues_by_factorization(const QuotientSpec& spec,
                                                 double tol = kDefaultRootTol);
std::vector<double> eigenvalues_by_jacobi(const QuotientSpec& spec);

}  // namespace specmoore
