#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbitlie {

/// Exact scalar: GMP rational, always kept in canonical form.
using Rational = boost::multiprecision::mpq_rational;
using RatVector = std::vector<Rational>;

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

/// Parses "p", "-p", "p/q". Returns nullopt on malformed input or q == 0.
std::optional<Rational> parse_rational(std::string_view text);

/// "p/q" or "p"; never floating.
std::string to_string(const Rational& q);
std::string to_string(const RatVector& v);

double to_double(const Rational& q);

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational approximate_rational(double x, std::int64_t max_den);

RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RatVector& v);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a);
RatVector operator*(const Rational& s, const RatVector& a);
RatVector& operator+=(RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);

}  // namespace orbitlie
