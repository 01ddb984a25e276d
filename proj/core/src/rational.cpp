#include "specmoore/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "specmoore/errors.hpp"

namespace specmoore {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) fail(ErrorKind::InvalidArgument, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<Rational> snap_to_rational(double x, std::int64_t max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  double a = x;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(a);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    auto ai = static_cast<std::int64_t>(fl);
    std::int64_t p2 = ai * p1 + p0;
    std::int64_t q2 = ai * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) {
      return Rational(p1, q1);
    }
    double frac = a - fl;
    if (frac < 1e-15) break;
    a = 1.0 / frac;
  }
  return std::nullopt;
}

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_plain_number(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    fail(ErrorKind::ParseError, "cannot parse number: '" + s + "'");
  }
  return v;
}

}  // namespace

double parse_real_expr(const std::string& text) {
  std::string s = trimmed(text);
  if (s.empty()) fail(ErrorKind::ParseError, "empty numeric expression");

  if (s.rfind("sqrt(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(5, s.size() - 6);
    double v = parse_real_expr(inner);
    if (v < 0) fail(ErrorKind::ParseError, "sqrt of negative value: '" + text + "'");
    return std::sqrt(v);
  }

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    double num = parse_plain_number(trimmed(s.substr(0, slash)));
    double den = parse_plain_number(trimmed(s.substr(slash + 1)));
    if (den == 0) fail(ErrorKind::ParseError, "division by zero: '" + text + "'");
    return num / den;
  }

  return parse_plain_number(s);
}

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = trimmed(text);
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      std::string ns = trimmed(s.substr(0, slash));
      std::string ds = trimmed(s.substr(slash + 1));
      std::size_t used = 0;
      std::int64_t n = std::stoll(ns, &used);
      if (used != ns.size()) return std::nullopt;
      std::int64_t d = std::stoll(ds, &used);
      if (used != ds.size() || d == 0) return std::nullopt;
      return Rational(n, d);
    }
    std::size_t used = 0;
    std::int64_t n = std::stoll(s, &used);
    if (used != s.size()) return std::nullopt;
    return Rational(n, 1);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace specmoore
