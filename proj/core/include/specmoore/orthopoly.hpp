#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

namespace specmoore {

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr int kMaxBisectionIterations = 200;

enum class RootFamily { F, G, CombinationG, CombinationH };

// An isolated real root together with the bracket that certifies it: the
// polynomial changes sign across (lo, hi) and hi - lo <= tol.
struct RootRecord {
  RootFamily family = RootFamily::G;
  int t = 0;
  double c = 1.0;  // only meaningful for the combination families
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double tol = 0.0;
};

// The three recurrence families for one valency r:
//
//   F_0 = 1, F_1 = x, F_2 = x^2 - r,  F_j = x F_{j-1} - (r-1) F_{j-2}
//   G_j = sum_{i<=j} F_i               (same recurrence from G_2 on)
//   H_j = sum over F_{j-2i}            (same recurrence from H_2 on, H_1 = x)
//
// Evaluation runs the recurrences directly and never touches the coefficient
// tables. The tables hold exact 64-bit monomial coefficients (constant term
// first), grow lazily under a lock, and raise Overflow with the offending
// degree instead of wrapping.
class PolynomialFamily {
 public:
  explicit PolynomialFamily(int valency);

  int valency() const { return r_; }

  double eval_f(int j, double x) const;
  double eval_g(int j, double x) const;
  double eval_h(int j, double x) const;

  // G_{t-1} + (c-1) G_{t-2}, the lambda2 polynomial of the general quotient.
  double eval_g_combination(int t, double c, double x) const;
  // H_{t-2} + (c-1) H_{t-4}, its bipartite counterpart (t >= 4).
  double eval_h_combination(int t, double c, double x) const;

  std::vector<std::int64_t> coefficients_f(int j) const;
  std::vector<std::int64_t> coefficients_g(int j) const;
  std::vector<std::int64_t> coefficients_h(int j) const;

  // Horner evaluation over the exact coefficient table; agreement with the
  // recurrence path is a tested invariant, not assumed.
  double eval_f_horner(int j, double x) const;
  double eval_g_horner(int j, double x) const;
  double eval_h_horner(int j, double x) const;

  // F_j(r) = r (r-1)^{j-1} in exact integer arithmetic (j >= 1).
  std::int64_t f_at_valency(int j) const;
  // G_j(r), exactly; equals the Moore bound m_{r,j}.
  std::int64_t g_at_valency(int j) const;

  double two_sqrt_q() const { return two_q_; }  // 2*sqrt(r-1)

 private:
  void extend_locked(int j) const;

  int r_;
  double two_q_;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<std::int64_t>> coeff_f_;
  mutable std::vector<std::vector<std::int64_t>> coeff_g_;
  mutable std::vector<std::vector<std::int64_t>> coeff_h_;
};

// Largest root of F_t or G_t (t >= 1). Brackets by stepping down from
// 2*sqrt(r-1) + 1e-9 in increments of 2*sqrt(r-1)/(4t) until the sign
// flips, then bisects. Throws NoSignChange if no flip appears above -(r+1).
RootRecord largest_root(const PolynomialFamily& fam, RootFamily family, int t,
                        double tol = kDefaultRootTol);

// Largest root of the combination polynomial: kind CombinationG needs t >= 2,
// kind CombinationH needs t >= 4 and uses H_0 = 1 at t = 4. This is the
// second-largest eigenvalue of the matching quotient matrix.
RootRecord largest_root_of_combination(const PolynomialFamily& fam,
                                       RootFamily kind, int t, double c,
                                       double tol = kDefaultRootTol);

// All t roots of G_t, ascending, isolated recursively: the roots of G_{t-1}
// separate those of G_t, so every bracket carries a certified sign change.
std::vector<double> all_roots_g(const PolynomialFamily& fam, int t,
                                double tol = kDefaultRootTol);

// All t-1 roots of G_{t-1} + (c-1) G_{t-2}, ascending. One root lies in each
// gap between consecutive roots of G_{t-2} plus one beyond each end.
std::vector<double> all_roots_g_combination(const PolynomialFamily& fam, int t,
                                            double c, double tol = kDefaultRootTol);

// All t-2 roots of H_{t-2} + (c-1) H_{t-4}, ascending, bracketed by the
// Chebyshev extrema 2 sqrt(r-1) cos((2k+1) pi / (2(t-1))). Requires
// |c - 1| < r - 1, which holds for 0 < c < r.
std::vector<double> all_roots_h_combination(const PolynomialFamily& fam, int t,
                                            double c, double tol = kDefaultRootTol);

// Midpoint-quadrature estimate of the F_i,F_j inner product against the
// weight sqrt(4(r-1) - x^2) / (r^2 - x^2) on [-2 sqrt(r-1), 2 sqrt(r-1)],
// after the substitution x = 2 sqrt(r-1) cos(phi). Test oracle only.
double orthogonality_defect(const PolynomialFamily& fam, int i, int j,
                            int quadrature_points);

}  // namespace specmoore
