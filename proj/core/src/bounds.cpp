#include "specmoore/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "specmoore/errors.hpp"

namespace specmoore {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxRegimeSize = 40;
constexpr double kRootMatchTol = 1e-7;

// Integer floor with a 1e-9 relative snap: regime solves produce values like
// 13.999999999999996 that are exactly integral in exact arithmetic.
std::int64_t snapped_floor(double bound, bool* exact) {
  if (!(bound < 9.2e18)) {
    *exact = false;
    return std::numeric_limits<std::int64_t>::max();
  }
  *exact = true;
  double rounded = std::round(bound);
  if (std::abs(bound - rounded) <= 1e-9 * std::max(1.0, std::abs(bound))) {
    return static_cast<std::int64_t>(rounded);
  }
  return static_cast<std::int64_t>(std::floor(bound));
}

std::int64_t even_floor(std::int64_t v) { return v - (v & 1); }

// 1 + sum_{i<=t-3} r(r-1)^i + r(r-1)^{t-2}/c == G_{t-2}(r) + F_{t-1}(r)/c.
// Double arithmetic: large-t regimes overflow int64 long before they stop
// being meaningful as real-valued bounds.
double theorem5_bound(int r, int t, double c) {
  double head = 1.0;
  double layer = r;
  for (int i = 0; i <= t - 3; ++i) {
    head += layer;
    layer *= (r - 1);
  }
  // layer = r (r-1)^{t-2} now
  return head + layer / c;
}

// 2 (sum_{i<=t-4} (r-1)^i + (r-1)^{t-3}/c + (r-1)^{t-2}/c)
double bipartite_bound(int r, int t, double c) {
  double head = 0.0;
  double pw = 1.0;
  for (int i = 0; i <= t - 4; ++i) {
    head += pw;
    pw *= (r - 1);
  }
  // pw = (r-1)^{t-3} now
  return 2.0 * (head + (pw + pw * (r - 1)) / c);
}

// lambda2 of the bipartite quotient at c = 1 (and, via the equality
// renaming, at c = r one size up): the largest root of H_{t-2}.
double bipartite_lambda2_at_c1(const PolynomialFamily& fam, int t) {
  if (t == 3) return 0.0;
  return fam.two_sqrt_q() * std::cos(kPi / (t - 1));
}

void note_interval(std::string* note, int t) {
  *note += "theta in (lambda^(" + std::to_string(t - 2) + "), lambda^(" +
           std::to_string(t - 1) + ")] regime";
}

}  // namespace

std::int64_t moore_bound(int r, int d) {
  if (r < 2) fail(ErrorKind::InvalidArgument, "moore_bound needs r >= 2");
  if (d < 1) fail(ErrorKind::InvalidArgument, "moore_bound needs D >= 1");
  const char* ctx = "moore bound";
  std::int64_t total = 1;
  std::int64_t layer = r;
  for (int i = 0; i < d; ++i) {
    total = checked_add(total, layer, ctx);
    if (i + 1 < d) layer = checked_mul(layer, r - 1, ctx);
  }
  return total;
}

std::int64_t alon_boppana_moore_bound(int r, int k) {
  if (r < 3) fail(ErrorKind::InvalidArgument, "needs r >= 3");
  if (k < 1) fail(ErrorKind::InvalidArgument, "needs k >= 1");
  return moore_bound(r, 2 * k - 1);
}

BoundResult v_upper(int r, double theta, double tol) {
  if (r < 3) fail(ErrorKind::InvalidArgument, "v_upper needs r >= 3");
  PolynomialFamily fam(r);
  const double top = fam.two_sqrt_q();
  if (!(theta >= -1.0) || !(theta < top)) {
    fail(ErrorKind::ThetaOutOfRange,
         "theta must lie in [-1, 2*sqrt(r-1)): no finite bound from this "
         "family outside it (Ramanujan regime above)");
  }

  std::optional<BoundResult> best;
  auto consider = [&](int t, double c, bool capped, std::string note) {
    double bound = theorem5_bound(r, t, c);
    // equal-bound ties resolve toward the smaller t scanned first
    if (best && bound >= best->bound - 1e-9 * std::max(1.0, std::abs(best->bound))) return;
    BoundResult res;
    res.r = r;
    res.theta = theta;
    res.kind = QuotientKind::General;
    res.t = t;
    res.c = c;
    res.c_rational = snap_to_rational(c);
    res.bound = bound;
    res.floor_bound = snapped_floor(bound, &res.floor_exact);
    res.capped = capped;
    res.regime_note = std::move(note);
    best = std::move(res);
  };

  for (int t = 2; t <= kMaxRegimeSize; ++t) {
    double c_raw;
    if (t == 2) {
      c_raw = -theta;
    } else {
      double den = fam.eval_g(t - 2, theta);
      double num = fam.eval_g(t - 1, theta);
      c_raw = (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num)))
                  ? std::numeric_limits<double>::infinity()
                  : 1.0 - num / den;
    }

    if (std::isfinite(c_raw) && c_raw > 0 && c_raw <= r) {
      // Candidate is admissible only when theta is the top root, not a
      // lower eigenvalue of the same quotient.
      RootRecord root = largest_root_of_combination(fam, RootFamily::CombinationG,
                                                    t, c_raw, tol);
      if (std::abs(root.value - theta) <= kRootMatchTol * std::max(1.0, std::abs(theta))) {
        std::string note;
        if (t == 2) {
          note = "t=2 quotient (outside the theorem's stated range, extrapolated)";
        } else {
          note_interval(&note, t);
        }
        consider(t, c_raw, false, std::move(note));
      }
    } else if (!(c_raw <= 0)) {
      // Solve pushed c above r (or hit a pole): cap at c = r. Valid whenever
      // theta does not exceed that quotient's lambda2.
      RootRecord root = largest_root_of_combination(fam, RootFamily::CombinationG,
                                                    t, static_cast<double>(r), tol);
      if (root.value >= theta - 1e-12) {
        consider(t, static_cast<double>(r), true,
                 "c solve exceeded r; capped at c=r (bound valid since theta <= "
                 "lambda2 of T(r," + std::to_string(t) + ",r))");
      }
    }

    if (t >= 4 && best) {
      double lam = largest_root(fam, RootFamily::G, t - 2, tol).value;
      if (lam > theta) break;  // no exact regime at any larger size
    }
  }

  if (!best) {
    fail(ErrorKind::ConvergenceFailure,
         "regime scan exhausted t <= " + std::to_string(kMaxRegimeSize) +
             "; theta is resolvable only below 2*sqrt(r-1)*cos(pi/" +
             std::to_string(kMaxRegimeSize - 2) + ")");
  }
  return *best;
}

BoundResult b_upper(int r, double theta, double tol) {
  if (r < 3) fail(ErrorKind::InvalidArgument, "b_upper needs r >= 3");
  PolynomialFamily fam(r);
  const double top = fam.two_sqrt_q();
  if (!(theta >= 0.0) || !(theta < top)) {
    fail(ErrorKind::ThetaOutOfRange,
         "theta must lie in [0, 2*sqrt(r-1)) for the bipartite bound");
  }

  std::optional<BoundResult> best;
  auto consider = [&](int t, double c, bool capped, std::string note) {
    double bound = bipartite_bound(r, t, c);
    if (best && bound >= best->bound - 1e-9 * std::max(1.0, std::abs(best->bound))) return;
    BoundResult res;
    res.r = r;
    res.theta = theta;
    res.kind = QuotientKind::Bipartite;
    res.t = t;
    res.c = c;
    res.c_rational = snap_to_rational(c);
    res.bound = bound;
    bool exact = true;
    std::int64_t fl = snapped_floor(bound, &exact);
    res.floor_exact = exact;
    res.floor_bound = exact ? even_floor(fl) : fl;
    res.capped = capped;
    res.regime_note = std::move(note);
    best = std::move(res);
  };

  for (int t = 4; t <= kMaxRegimeSize; ++t) {
    double c_raw;
    if (t == 4) {
      c_raw = r - theta * theta;  // H_2 + (c-1)H_0 = x^2 - r + c
    } else {
      double den = fam.eval_h(t - 4, theta);
      double num = fam.eval_h(t - 2, theta);
      c_raw = (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num)))
                  ? std::numeric_limits<double>::infinity()
                  : 1.0 - num / den;
    }

    const bool at_c_equal_r = std::isfinite(c_raw) && std::abs(c_raw - r) <= 1e-9 * r;
    if (at_c_equal_r) {
      double lam = bipartite_lambda2_at_c1(fam, t - 1);
      if (std::abs(lam - theta) <= kRootMatchTol * std::max(1.0, std::abs(theta))) {
        consider(t, static_cast<double>(r), false,
                 "c=r: equality case renames to B(r," + std::to_string(t - 1) + ",1)");
      }
    } else if (std::isfinite(c_raw) && c_raw > 0 && c_raw < r) {
      RootRecord root = largest_root_of_combination(fam, RootFamily::CombinationH,
                                                    t, c_raw, tol);
      if (std::abs(root.value - theta) <= kRootMatchTol * std::max(1.0, std::abs(theta))) {
        consider(t, c_raw, false,
                 "theta captured by the bipartite size-" + std::to_string(t) + " regime");
      }
    } else if (!(c_raw <= 0)) {
      double lam = bipartite_lambda2_at_c1(fam, t - 1);  // lambda2 of B(r,t,r)
      if (lam >= theta - 1e-12) {
        consider(t, static_cast<double>(r), true,
                 "c solve exceeded r; capped at c=r (renames to B(r," +
                     std::to_string(t - 1) + ",1))");
      }
    }

    if (t >= 6 && best) {
      double floor_lam = fam.two_sqrt_q() * std::cos(kPi / (t - 3));
      if (floor_lam > theta) break;
    }
  }

  if (!best) {
    fail(ErrorKind::ConvergenceFailure,
         "bipartite regime scan exhausted t <= " + std::to_string(kMaxRegimeSize) +
             "; theta is resolvable only below 2*sqrt(r-1)*cos(pi/" +
             std::to_string(kMaxRegimeSize - 3) + ")");
  }
  return *best;
}

double defect_bound(int r, int d, double beta) {
  if (r < 3) fail(ErrorKind::InvalidArgument, "defect_bound needs r >= 3");
  if (d < 2) fail(ErrorKind::InvalidArgument, "defect_bound needs D >= 2");
  if (!(beta >= 0.0) || !(beta < r)) {
    fail(ErrorKind::InvalidArgument, "defect_bound needs beta in [0, r)");
  }
  PolynomialFamily fam(r);
  return static_cast<double>(moore_bound(r, d)) - fam.eval_g(d, beta);
}

double beta_threshold(int r, int d, std::int64_t known_order, double tol) {
  if (r < 3) fail(ErrorKind::InvalidArgument, "beta_threshold needs r >= 3");
  if (d < 2) fail(ErrorKind::InvalidArgument, "beta_threshold needs D >= 2");
  std::int64_t m = moore_bound(r, d);
  std::int64_t defect = m - known_order;
  if (defect <= 0) {
    fail(ErrorKind::NonPositiveDefect,
         "known order " + std::to_string(known_order) +
             " meets or beats the Moore bound " + std::to_string(m));
  }
  PolynomialFamily fam(r);
  // G_D is zero at lambda^(D) and climbs to m_{r,D} at x = r, so the level
  // set G_D = defect has exactly one root in between.
  double lo = largest_root(fam, RootFamily::G, d, tol).value;
  double hi = static_cast<double>(r);
  double target = static_cast<double>(defect);
  for (int i = 0; i < kMaxBisectionIterations && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    if (fam.eval_g(d, mid) > target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double lower_threshold(int r, std::int64_t known_order, double tol) {
  if (r < 3) fail(ErrorKind::InvalidArgument, "lower_threshold needs r >= 3");
  if (known_order <= r + 1) {
    fail(ErrorKind::NotInvertible,
         "known order must exceed r+1 = " + std::to_string(r + 1) +
             " (v_upper never drops below the complete-graph bound)");
  }
  PolynomialFamily fam(r);
  // Upper bracket: the smallest D with m_{r,D} >= known, where
  // v_upper(lambda^(D)) = m_{r,D} exactly.
  int d = 1;
  while (moore_bound(r, d) < known_order) {
    ++d;
    if (d > 60) fail(ErrorKind::NotInvertible, "known order out of reach");
  }
  double lo = -1.0;
  double hi = largest_root(fam, RootFamily::G, d, tol).value;
  double target = static_cast<double>(known_order);
  if (v_upper(r, hi, tol).bound < target) {
    fail(ErrorKind::NotInvertible, "bracketing failed for lower threshold");
  }
  for (int i = 0; i < kMaxBisectionIterations && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    if (v_upper(r, mid, tol).bound > target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DefectWindow search_window(int r, int d, std::int64_t known_order, double tol) {
  DefectWindow w;
  w.r = r;
  w.d = d;
  w.known_order = known_order;
  w.moore = moore_bound(r, d);
  w.defect = w.moore - known_order;
  PolynomialFamily fam(r);
  w.lambda_d = largest_root(fam, RootFamily::G, d, tol).value;
  w.beta_threshold = beta_threshold(r, d, known_order, tol);
  w.lower_threshold = lower_threshold(r, known_order, tol);
  if (!(w.lower_threshold < w.lambda_d && w.lambda_d < w.beta_threshold)) {
    fail(ErrorKind::CrossCheckFailure,
         "defect window ordering violated: lower=" + std::to_string(w.lower_threshold) +
             " lambda^(D)=" + std::to_string(w.lambda_d) +
             " upper=" + std::to_string(w.beta_threshold));
  }
  return w;
}

}  // namespace specmoore
