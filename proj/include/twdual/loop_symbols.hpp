#pragma once

#include "twdual/arith.hpp"
#include "twdual/central_ext.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twdual {

/// Q or a prime field F_p. Elements are Rationals; over F_p they are kept
/// reduced to integers in [0, p).
class CoefficientField {
  public:
    static CoefficientField rationals() { return CoefficientField(0); }
    /// Throws DomainError unless p is prime.
    static CoefficientField prime(unsigned long p);
    /// "Q", "F5", "GF(7)".
    static CoefficientField parse(std::string_view text);

    bool is_rationals() const { return p_ == 0; }
    unsigned long characteristic() const { return p_; }

    Rational normalize(const Rational &x) const;
    Rational add(const Rational &a, const Rational &b) const { return normalize(a + b); }
    Rational mul(const Rational &a, const Rational &b) const { return normalize(a * b); }
    Rational neg(const Rational &a) const { return normalize(-a); }
    Rational inverse(const Rational &a) const;
    Rational power(const Rational &a, const Integer &e) const;

    std::string to_string() const;
    friend bool operator==(const CoefficientField &, const CoefficientField &) = default;

  private:
    explicit CoefficientField(unsigned long p) : p_(p) {}
    unsigned long p_;
};

/// t^v (c_0 + c_1 t + ... ) known modulo t^(v + precision), c_0 != 0.
/// The zero series is a separate exact value.
class LaurentSeries {
  public:
    /// Leading zero coefficients are stripped (each costs one unit of
    /// precision). Throws DomainError if nothing nonzero survives.
    LaurentSeries(CoefficientField field, long valuation, std::vector<Rational> coefficients, long precision);

    static LaurentSeries zero(CoefficientField field);
    static LaurentSeries monomial(CoefficientField field, const Rational &c, long exponent, long precision);
    static LaurentSeries one(CoefficientField field, long precision) { return monomial(field, 1, 0, precision); }

    /// Parses expressions such as "t^-2*(3 + 1/2*t + t^3)" or "1 - t + O(t^5)".
    /// Without an O-term, precision is max(default_precision, span of terms).
    static LaurentSeries parse(CoefficientField field, std::string_view text, long default_precision = 16);

    const CoefficientField &field() const { return field_; }
    bool is_zero() const { return zero_; }
    long valuation() const;
    long precision() const { return precision_; }
    long absolute_precision() const { return valuation() + precision_; }
    const Rational &leading() const;
    /// Coefficient of t^k. Throws DomainError when k is beyond the precision.
    Rational coefficient(long k) const;

    LaurentSeries invert() const;
    LaurentSeries pow(long e) const;

    friend LaurentSeries operator*(const LaurentSeries &f, const LaurentSeries &g);
    friend LaurentSeries operator+(const LaurentSeries &f, const LaurentSeries &g);
    friend LaurentSeries operator-(const LaurentSeries &f, const LaurentSeries &g);
    LaurentSeries operator-() const;

    std::string to_string() const;

  private:
    LaurentSeries(CoefficientField field) : field_(field), zero_(true) {}

    CoefficientField field_;
    bool zero_ = false;
    long valuation_ = 0;
    long precision_ = 0;
    std::vector<Rational> coefficients_; // exactly precision_ entries
};

/// (f, g)_st = (-1)^{v(f) v(g)} (g^{v(f)} f^{-v(g)})(0).
/// Computed by series arithmetic and asserted equal to the value predicted
/// from valuations and leading coefficients alone.
Rational tame_symbol(const LaurentSeries &f, const LaurentSeries &g);

/// An element sum_k lambda_k (x) f_k of T(F) = X_*(T) (x) F^*.
struct TorusLoopPoint {
    std::vector<std::pair<RatVector, LaurentSeries>> terms;
};

/// Commutator of the level-m extension on the torus:
/// prod over term pairs of (f, g)_st^{m(lambda, mu)}.
Rational torus_commutator(const ExtensionSpec &spec, const TorusLoopPoint &x1, const TorusLoopPoint &x2);

} // namespace twdual
