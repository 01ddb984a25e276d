#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace specmoore {

// Exact p/q with q > 0, always normalized. Used for exact CLI inputs
// ("7/6") and for annotating solved parameters that land on small rationals.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

// Recovers a small-denominator rational from a double via continued
// fractions. Returns nothing unless |x - p/q| <= tol with q <= max_den.
std::optional<Rational> snap_to_rational(double x, std::int64_t max_den = 100000,
                                         double tol = 1e-9);

// Accepts "1.25", "7/6" and "sqrt(2)" (also "2*sqrt(2)" is NOT supported;
// the forms above are what reproduction scripts need). Throws ParseError.
double parse_real_expr(const std::string& text);

// Exact rational view of the same input when it has one ("7/6", "3").
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace specmoore
