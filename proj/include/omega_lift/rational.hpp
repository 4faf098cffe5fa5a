#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace omega_lift {

using Integer = mpz_class;
using Rational = mpq_class;

/// A vector in the rational ambient space. All arithmetic is exact.
using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t dim);
Vec unit_vec(std::size_t dim, std::size_t i);

/// Ambient dot product; throws std::invalid_argument on a dimension mismatch.
Rational dot(const Vec& x, const Vec& y);

Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator-(const Vec& x);
Vec operator*(const Rational& c, const Vec& x);
Vec& operator+=(Vec& x, const Vec& y);
Vec& operator-=(Vec& x, const Vec& y);

bool is_zero(const Vec& x);

/// Pads with zeros (or checks that the dropped tail is zero when shrinking).
Vec resize_vec(const Vec& x, std::size_t dim);

/// Exact "p/q" form, always with an explicit denominator.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q".
Rational parse_rational(std::string_view text);

/// Human-readable "[1, -1/2, 0]".
std::string format_vec(const Vec& x);

Integer lcm_of_denominators(const Vec& x);

}  // namespace omega_lift
