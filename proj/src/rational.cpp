#include "orbitlie/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitlie {

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) return std::nullopt;
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  boost::multiprecision::mpz_int p(num_s), q{std::string(den)};
  if (q == 0) return std::nullopt;
  return Rational(p, q);
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational approximate_rational(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("approximate_rational: non-finite input");
  // Convergents h/k of the continued fraction of x.
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_f = std::floor(r);
    if (std::fabs(a_f) > 9.0e15) break;
    const auto a = static_cast<std::int64_t>(a_f);
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > max_den) break;
    const std::int64_t h2 = a * h1 + h0;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    const double frac = r - a_f;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return Rational(static_cast<std::int64_t>(std::llround(x)));
  return Rational(h1, k1);
}

RatVector zero_vector(std::size_t n) { return RatVector(n, Rational(0)); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

static void check_same(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  check_same(a, b);
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  check_same(a, b);
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator-(const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

RatVector& operator+=(RatVector& a, const RatVector& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Rational dot(const RatVector& a, const RatVector& b) {
  check_same(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace orbitlie
