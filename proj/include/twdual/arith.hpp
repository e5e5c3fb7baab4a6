#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace twdual {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// "p" for integers, "p/q" otherwise (lowest terms, q > 0).
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);
std::string to_string(const RatVector &v);

/// Parses "p", "-p", "p/q". Throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);
/// Comma-separated rationals, optional surrounding brackets: "1,-1/2,0" or "[1,0]".
RatVector parse_rat_vector(std::string_view text);

bool is_integer(const Rational &q);
Integer to_integer(const Rational &q); // throws InternalError if not integral

Integer gcd(const Integer &a, const Integer &b);
Integer lcm(const Integer &a, const Integer &b);
Integer denominator_lcm(const RatVector &v);

RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RatVector &v);
bool is_integral(const RatVector &v);

RatVector operator+(const RatVector &a, const RatVector &b);
RatVector operator-(const RatVector &a, const RatVector &b);
RatVector operator-(const RatVector &a);
RatVector operator*(const Rational &s, const RatVector &v);

} // namespace twdual
