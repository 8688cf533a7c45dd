#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace vinberg {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs(const Integer& a) { Integer r; mpz_abs(r.get_mpz_t(), a.get_mpz_t()); return r; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Non-negative gcd of all entries; zero for an all-zero span.
Integer content(std::span<const Integer> values);

/// floor(sqrt(a)) for a >= 0.
Integer isqrt(const Integer& a);

bool is_perfect_square(const Integer& a);

/// Exact floor / ceil of a rational.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Floor division and non-negative remainder (divisor nonzero).
Integer floor_div(const Integer& a, const Integer& b);
Integer mod(const Integer& a, const Integer& b);

bool divides(const Integer& d, const Integer& a);

/// Deterministic primality by trial division.
bool is_prime(const Integer& n);

/// Exact conversion; throws if the value does not fit.
long to_long(const Integer& a);

std::string to_string(const Integer& a);
std::string to_string(const Rational& q);

/// Parses "a" or "a/b" into a canonical rational. Throws Error(Parse).
Rational parse_rational(const std::string& text);

/// Scales a rational vector to the primitive integer vector with the same
/// direction (positive multiple).
std::vector<Integer> primitive_integer_multiple(std::span<const Rational> v);

}  // namespace vinberg
