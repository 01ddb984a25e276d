#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "specmoore/quotient.hpp"
#include "specmoore/rational.hpp"

namespace specmoore {

// Outcome of a spectral order bound. The located quotient regime (t, c)
// satisfies lambda2(quotient) = theta for uncapped results; when the solve
// for c exceeds r the candidate is kept at c = r (still a valid bound, theta
// below that quotient's lambda2) and flagged via `capped`.
struct BoundResult {
  int r = 0;
  double theta = 0.0;
  QuotientKind kind = QuotientKind::General;
  int t = 0;
  double c = 0.0;
  std::optional<Rational> c_rational;  // populated when c snaps to p/q
  double bound = 0.0;
  std::int64_t floor_bound = 0;
  bool floor_exact = true;  // false when the bound exceeds the int64 range
  bool capped = false;
  std::string regime_note;
};

struct DefectWindow {
  int r = 0;
  int d = 0;
  std::int64_t known_order = 0;
  std::int64_t moore = 0;
  std::int64_t defect = 0;
  double lower_threshold = 0.0;  // lambda2 cap: below this the order drops under known
  double lambda_d = 0.0;         // largest root of G_D
  double beta_threshold = 0.0;   // beta above this forces order below known
};

// 1 + r + r(r-1) + ... + r(r-1)^{D-1}, exact.
std::int64_t moore_bound(int r, int d);

// m_{r,2k-1}; the Moore-bound side of the Alon-Boppana comparison.
std::int64_t alon_boppana_moore_bound(int r, int k);

// Maximum order of a connected r-regular graph with lambda2 <= theta,
// minimized over all admissible quotient regimes (t, c). Theta must lie in
// [-1, 2 sqrt(r-1)); above that no finite bound exists (Ramanujan regime).
BoundResult v_upper(int r, double theta, double tol = kDefaultRootTol);

// Bipartite counterpart over the B(r,t,c) family; theta in [0, 2 sqrt(r-1)).
// Bounds are floored to the nearest even integer (both sides of a bipartite
// regular graph have the same size).
BoundResult b_upper(int r, double theta, double tol = kDefaultRootTol);

// m_{r,D} - G_D(beta). May exceed the Moore bound when G_D(beta) < 0.
double defect_bound(int r, int d, double beta);

// The unique root beta* > lambda^(D) of G_D(x) = m_{r,D} - known_order; any
// beta above it pushes the defect bound below the known order.
double beta_threshold(int r, int d, std::int64_t known_order,
                      double tol = kDefaultRootTol);

// Theta* with v_upper(r, theta*) = known_order; any r-regular graph with
// lambda2 below theta* has fewer than known_order vertices.
double lower_threshold(int r, std::int64_t known_order,
                       double tol = kDefaultRootTol);

DefectWindow search_window(int r, int d, std::int64_t known_order,
                           double tol = kDefaultRootTol);

}  // namespace specmoore
