#include "specmoore/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "specmoore/errors.hpp"

namespace specmoore {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

PolynomialFamily::PolynomialFamily(int valency) : r_(valency) {
  if (valency < 3) {
    fail(ErrorKind::InvalidArgument,
         "valency must be at least 3, got " + std::to_string(valency));
  }
  two_q_ = 2.0 * std::sqrt(static_cast<double>(r_ - 1));
  coeff_f_ = {{1}, {0, 1}, {-static_cast<std::int64_t>(r_), 0, 1}};
  coeff_g_ = {{1}, {1, 1}};
  coeff_h_ = {{1}, {0, 1}};
}

double PolynomialFamily::eval_f(int j, double x) const {
  if (j < 0) fail(ErrorKind::InvalidArgument, "negative degree for F");
  if (j == 0) return 1.0;
  if (j == 1) return x;
  double prev = x;              // F_1
  double cur = x * x - r_;      // F_2
  for (int k = 3; k <= j; ++k) {
    double next = x * cur - (r_ - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double PolynomialFamily::eval_g(int j, double x) const {
  if (j < 0) fail(ErrorKind::InvalidArgument, "negative degree for G");
  if (j == 0) return 1.0;
  double prev = 1.0;       // G_0
  double cur = x + 1.0;    // G_1
  for (int k = 2; k <= j; ++k) {
    double next = x * cur - (r_ - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double PolynomialFamily::eval_h(int j, double x) const {
  if (j < 0) fail(ErrorKind::InvalidArgument, "negative degree for H");
  if (j == 0) return 1.0;
  double prev = 1.0;  // H_0
  double cur = x;     // H_1
  for (int k = 2; k <= j; ++k) {
    double next = x * cur - (r_ - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double PolynomialFamily::eval_g_combination(int t, double c, double x) const {
  if (t < 2) fail(ErrorKind::InvalidArgument, "G combination needs t >= 2");
  return eval_g(t - 1, x) + (c - 1.0) * eval_g(t - 2, x);
}

double PolynomialFamily::eval_h_combination(int t, double c, double x) const {
  if (t < 4) fail(ErrorKind::InvalidArgument, "H combination needs t >= 4");
  return eval_h(t - 2, x) + (c - 1.0) * eval_h(t - 4, x);
}

void PolynomialFamily::extend_locked(int j) const {
  while (static_cast<int>(coeff_f_.size()) <= j) {
    int n = static_cast<int>(coeff_f_.size());
    const auto& a = coeff_f_[n - 1];
    const auto& b = coeff_f_[n - 2];
    std::vector<std::int64_t> next(n + 1, 0);
    std::string ctx_str = "F coefficients at degree " + std::to_string(n);
    const char* ctx = ctx_str.c_str();
    for (std::size_t k = 0; k < a.size(); ++k) next[k + 1] = a[k];  // shift = *x
    for (std::size_t k = 0; k < b.size(); ++k) {
      next[k] = checked_sub(next[k], checked_mul(r_ - 1, b[k], ctx), ctx);
    }
    coeff_f_.push_back(std::move(next));
  }
  while (static_cast<int>(coeff_g_.size()) <= j) {
    int n = static_cast<int>(coeff_g_.size());
    // G_n = G_{n-1} + F_n
    std::vector<std::int64_t> next = coeff_f_[n];
    const auto& g = coeff_g_[n - 1];
    const char* ctx = "G coefficient sum";
    for (std::size_t k = 0; k < g.size(); ++k) next[k] = checked_add(next[k], g[k], ctx);
    coeff_g_.push_back(std::move(next));
  }
  while (static_cast<int>(coeff_h_.size()) <= j) {
    int n = static_cast<int>(coeff_h_.size());
    // H_n = F_n + H_{n-2}
    std::vector<std::int64_t> next = coeff_f_[n];
    const char* ctx = "H coefficient sum";
    if (n >= 2) {
      const auto& h = coeff_h_[n - 2];
      for (std::size_t k = 0; k < h.size(); ++k) next[k] = checked_add(next[k], h[k], ctx);
    }
    coeff_h_.push_back(std::move(next));
  }
}

std::vector<std::int64_t> PolynomialFamily::coefficients_f(int j) const {
  if (j < 0) fail(ErrorKind::InvalidArgument, "negative degree for F");
  std::lock_guard<std::mutex> lock(mu_);
  extend_locked(j);
  return coeff_f_[j];
}

std::vector<std::int64_t> PolynomialFamily::coefficients_g(int j) const {
  if (j < 0) fail(ErrorKind::InvalidArgument, "negative degree for G");
  std::lock_guard<std::mutex> lock(mu_);
  extend_locked(j);
  return coeff_g_[j];
}

std::vector<std::int64_t> PolynomialFamily::coefficients_h(int j) const {
  if (j < 0) fail(ErrorKind::InvalidArgument, "negative degree for H");
  std::lock_guard<std::mutex> lock(mu_);
  extend_locked(j);
  return coeff_h_[j];
}

namespace {

double horner(const std::vector<std::int64_t>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + static_cast<double>(*it);
  }
  return acc;
}

}  // namespace

double PolynomialFamily::eval_f_horner(int j, double x) const {
  return horner(coefficients_f(j), x);
}

double PolynomialFamily::eval_g_horner(int j, double x) const {
  return horner(coefficients_g(j), x);
}

double PolynomialFamily::eval_h_horner(int j, double x) const {
  return horner(coefficients_h(j), x);
}

std::int64_t PolynomialFamily::f_at_valency(int j) const {
  if (j < 1) fail(ErrorKind::InvalidArgument, "F_j(r) identity needs j >= 1");
  std::int64_t acc = r_;
  const char* ctx = "F_j(r)";
  for (int k = 1; k < j; ++k) acc = checked_mul(acc, r_ - 1, ctx);
  return acc;
}

std::int64_t PolynomialFamily::g_at_valency(int j) const {
  if (j < 0) fail(ErrorKind::InvalidArgument, "negative degree for G");
  std::int64_t acc = 1;
  const char* ctx = "G_j(r)";
  for (int k = 1; k <= j; ++k) acc = checked_add(acc, f_at_valency(k), ctx);
  return acc;
}

namespace {

using EvalFn = std::function<double(double)>;

// Bisect a certified sign-change bracket down to width tol. The sign at lo
// must differ from the sign at hi.
RootRecord bisect(const EvalFn& f, RootFamily family, int t, double c, double lo,
                  double hi, double tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) {
    // exact hit; shrink around it
    return RootRecord{family, t, c, lo, lo - tol / 2, lo + tol / 2, tol};
  }
  if ((flo > 0) == (fhi > 0)) {
    fail(ErrorKind::NoSignChange,
         "no sign change across bracket [" + std::to_string(lo) + ", " +
             std::to_string(hi) + "]");
  }
  int iterations = 0;
  while (hi - lo > tol) {
    if (++iterations > kMaxBisectionIterations) {
      fail(ErrorKind::ConvergenceFailure,
           "bisection exceeded " + std::to_string(kMaxBisectionIterations) +
               " iterations");
    }
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // hit double-precision resolution
    double fmid = f(mid);
    if (fmid == 0.0) {
      lo = std::nextafter(mid, lo);
      hi = std::nextafter(mid, hi);
      break;
    }
    if ((fmid > 0) == (fhi > 0)) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  RootRecord rec;
  rec.family = family;
  rec.t = t;
  rec.c = c;
  rec.lo = lo;
  rec.hi = hi;
  rec.value = 0.5 * (lo + hi);
  rec.tol = tol;
  return rec;
}

}  // namespace

RootRecord largest_root(const PolynomialFamily& fam, RootFamily family, int t,
                        double tol) {
  if (t < 1) fail(ErrorKind::InvalidArgument, "largest_root needs t >= 1");
  if (tol <= 0) fail(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (family != RootFamily::F && family != RootFamily::G) {
    fail(ErrorKind::InvalidArgument, "largest_root handles families F and G");
  }
  EvalFn f = [&fam, family, t](double x) {
    return family == RootFamily::F ? fam.eval_f(t, x) : fam.eval_g(t, x);
  };

  const double top = fam.two_sqrt_q() + 1e-9;
  const double step = fam.two_sqrt_q() / (4.0 * t);
  const double floor_limit = -(fam.valency() + 1.0);
  double hi = top;
  double fhi = f(hi);
  if (fhi <= 0) {
    fail(ErrorKind::NoSignChange, "polynomial not positive above all roots");
  }
  double lo = hi - step;
  while (f(lo) > 0) {
    hi = lo;
    lo -= step;
    if (lo < floor_limit) {
      fail(ErrorKind::NoSignChange,
           "no sign change while stepping down from 2*sqrt(r-1)");
    }
  }
  return bisect(f, family, t, 1.0, lo, hi, tol);
}

RootRecord largest_root_of_combination(const PolynomialFamily& fam,
                                       RootFamily kind, int t, double c,
                                       double tol) {
  if (c <= 0) fail(ErrorKind::InvalidArgument, "combination needs c > 0");
  if (tol <= 0) fail(ErrorKind::InvalidArgument, "tolerance must be positive");
  const int r = fam.valency();
  if (c > r + 1e-9) {
    fail(ErrorKind::InvalidArgument, "combination needs c <= r");
  }

  if (kind == RootFamily::CombinationG) {
    if (t < 2) fail(ErrorKind::InvalidArgument, "G combination needs t >= 2");
    EvalFn f = [&fam, t, c](double x) { return fam.eval_g_combination(t, c, x); };
    if (t == 2) {
      // linear: x + c
      return bisect(f, kind, t, c, -c - std::max(tol, 1e-15), -c + std::max(tol, 1e-15), tol);
    }
    // The largest root of G_{t-2} sits strictly between the combination's top
    // two roots, so [that, 2 sqrt(r-1)+eps] is a certified bracket.
    double lo = (t == 3) ? -1.0 : largest_root(fam, RootFamily::G, t - 2, tol).value;
    double hi = fam.two_sqrt_q() + 1e-9;
    if (f(lo) >= 0) lo -= 16 * std::max(tol, 1e-12);
    return bisect(f, kind, t, c, lo, hi, tol);
  }

  if (kind != RootFamily::CombinationH) {
    fail(ErrorKind::InvalidArgument, "combination kind must be G or H");
  }
  if (t < 4) fail(ErrorKind::InvalidArgument, "H combination needs t >= 4");

  if (std::abs(c - r) <= 1e-12 * r) {
    // H_{t-2} + (r-1) H_{t-4} = x H_{t-3}: at c = r the combination
    // degenerates; its largest root comes from the odd factor.
    if (t == 4) {
      // x^2: report the root 0, bracketing the factor x.
      EvalFn odd = [](double x) { return x; };
      return bisect(odd, kind, t, c, -std::max(tol, 1e-15), std::max(tol, 1e-15), tol);
    }
    EvalFn f = [&fam, t](double x) { return x * fam.eval_h(t - 3, x); };
    // x H_{t-3} is negative at 2 sqrt(r-1) cos(1.25 pi/(t-2)): the point is
    // positive (t >= 5) and sits between the top two roots of H_{t-3}.
    double lo = fam.two_sqrt_q() * std::cos(1.25 * kPi / (t - 2));
    double hi = fam.two_sqrt_q() + 1e-9;
    return bisect(f, kind, t, c, lo, hi, tol);
  }

  EvalFn f = [&fam, t, c](double x) { return fam.eval_h_combination(t, c, x); };
  double lo;
  if (t == 4) {
    lo = 0.0;  // combination(0) = c - r < 0
  } else {
    // largest root of H_{t-4}: closed form 2 sqrt(r-1) cos(pi/(t-3))
    lo = fam.two_sqrt_q() * std::cos(kPi / (t - 3));
    if (f(lo) >= 0) lo += 16 * std::max(tol, 1e-12);  // lands on a shared root at t=5
  }
  double hi = fam.two_sqrt_q() + 1e-9;
  return bisect(f, kind, t, c, lo, hi, tol);
}

std::vector<double> all_roots_g(const PolynomialFamily& fam, int t, double tol) {
  if (t < 1) fail(ErrorKind::InvalidArgument, "all_roots_g needs t >= 1");
  std::vector<double> prev = {-1.0};  // roots of G_1
  if (t == 1) return prev;
  for (int k = 2; k <= t; ++k) {
    EvalFn f = [&fam, k](double x) { return fam.eval_g(k, x); };
    std::vector<double> cur;
    cur.reserve(k);
    double lo = -fam.two_sqrt_q() - 1.0;
    for (int i = 0; i <= static_cast<int>(prev.size()); ++i) {
      double hi = (i < static_cast<int>(prev.size())) ? prev[i]
                                                      : fam.two_sqrt_q() + 1e-9;
      cur.push_back(bisect(f, RootFamily::G, k, 1.0, lo, hi, tol).value);
      lo = hi;
    }
    prev = std::move(cur);
  }
  return prev;
}

std::vector<double> all_roots_g_combination(const PolynomialFamily& fam, int t,
                                            double c, double tol) {
  if (t < 2) fail(ErrorKind::InvalidArgument, "combination needs t >= 2");
  if (c <= 0) fail(ErrorKind::InvalidArgument, "combination needs c > 0");
  if (t == 2) return {-c};
  EvalFn f = [&fam, t, c](double x) { return fam.eval_g_combination(t, c, x); };
  std::vector<double> separators = all_roots_g(fam, t - 2, tol);
  std::vector<double> roots;
  roots.reserve(t - 1);
  // Quotient eigenvalues live in [-r, r]; pad one unit on each side.
  double lo = -(fam.valency() + 1.0);
  for (int i = 0; i <= static_cast<int>(separators.size()); ++i) {
    double hi = (i < static_cast<int>(separators.size()))
                    ? separators[i]
                    : fam.two_sqrt_q() + 1e-9;
    roots.push_back(bisect(f, RootFamily::CombinationG, t, c, lo, hi, tol).value);
    lo = hi;
  }
  return roots;
}

std::vector<double> all_roots_h_combination(const PolynomialFamily& fam, int t,
                                            double c, double tol) {
  if (t < 4) fail(ErrorKind::InvalidArgument, "H combination needs t >= 4");
  const int r = fam.valency();
  if (!(std::abs(c - 1.0) < r - 1)) {
    fail(ErrorKind::InvalidArgument,
         "H root brackets need |c-1| < r-1 (use the c = r renaming instead)");
  }
  EvalFn f = [&fam, t, c](double x) { return fam.eval_h_combination(t, c, x); };
  // Sign of the combination at 2 sqrt(r-1) cos((2k+1) pi / (2(t-1))) is
  // (-1)^k, so consecutive extrema bracket every root.
  std::vector<double> roots;
  roots.reserve(t - 2);
  const int n = t - 1;
  double prev_x = fam.two_sqrt_q() * std::cos(kPi * 0.5 / (t - 1));
  for (int k = 1; k <= n - 1; ++k) {
    double x = fam.two_sqrt_q() * std::cos((2.0 * k + 1.0) * kPi * 0.5 / (t - 1));
    roots.push_back(bisect(f, RootFamily::CombinationH, t, c, x, prev_x, tol).value);
    prev_x = x;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double orthogonality_defect(const PolynomialFamily& fam, int i, int j,
                            int quadrature_points) {
  if (i == j) fail(ErrorKind::InvalidArgument, "defect oracle needs i != j");
  if (quadrature_points < 64) {
    fail(ErrorKind::InvalidArgument, "need at least 64 quadrature points");
  }
  const int r = fam.valency();
  const double q2 = fam.two_sqrt_q();  // 2 sqrt(r-1)
  double sum = 0.0;
  for (int k = 0; k < quadrature_points; ++k) {
    double phi = (k + 0.5) * kPi / quadrature_points;
    double x = q2 * std::cos(phi);
    double s = q2 * std::sin(phi);
    // w(x) dx after x = 2 sqrt(r-1) cos(phi); the sqrt singularity cancels.
    double weight = s * s / (static_cast<double>(r) * r - x * x);
    sum += fam.eval_f(i, x) * fam.eval_f(j, x) * weight;
  }
  return sum * kPi / quadrature_points;
}

}  // namespace specmoore
