#include "twdual/central_ext.hpp"

#include "twdual/error.hpp"

namespace twdual {

namespace {

bool multiple_of_iota_in_x(const RootDatum &datum, const CanonicalForm &form, const Integer &m) {
    for (std::size_t b = 0; b < datum.rank(); ++b) {
        RatVector v = Rational(m) * apply_iota(form, datum.cocharacters().basis_vector(b));
        if (!datum.characters().contains(v))
            return false;
    }
    return true;
}

} // namespace

Integer compute_d(const RootDatum &datum) {
    CanonicalForm form = canonical_form(datum);
    Integer d = 1;
    for (std::size_t b = 0; b < datum.rank(); ++b) {
        RatVector coords = datum.characters().coordinates(apply_iota(form, datum.cocharacters().basis_vector(b)));
        d = lcm(d, denominator_lcm(coords));
    }
    ensure(multiple_of_iota_in_x(datum, form, d), "d * iota(Y) is not contained in X");
    for (Integer m = 1; m < d; ++m)
        if (d % m == 0)
            ensure(!multiple_of_iota_in_x(datum, form, m), "d is not minimal");
    return d;
}

ExtensionClassification classify_extensions(const RootDatum &datum) {
    ExtensionClassification c{compute_d(datum), dual_coxeter(datum), fundamental_group(datum)};
    ensure(c.h_dual % c.d == 0, "d does not divide the dual Coxeter number");
    return c;
}

ExtensionSpec::ExtensionSpec(RootDatum datum, Integer level)
    : datum_(std::make_shared<const RootDatum>(std::move(datum))), form_(canonical_form(*datum_)),
      d_(compute_d(*datum_)), level_(std::move(level)) {
    require(level_ % d_ == 0, "level m = " + level_.get_str() + " is not a multiple of d = " + d_.get_str());
    // Integral on Y x Y, not just on coroots; check in a basis of Y.
    const std::size_t n = datum_->rank();
    const Lattice &y = datum_->cocharacters();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            ensure(is_integer(Rational(level_) * form_value(form_, y.basis_vector(a), y.basis_vector(b))),
                   "commutator form not integral on Y");
    commutator_form_ = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            commutator_form_(i, j) = to_integer(Rational(level_) * form_.gram(i, j));
}

ExtensionSpec ExtensionSpec::determinant(RootDatum datum) {
    Integer h = dual_coxeter(datum);
    return ExtensionSpec(std::move(datum), 2 * h);
}

Integer commutator_exponent(const ExtensionSpec &spec, const RatVector &l1, const RatVector &l2) {
    const Lattice &y = spec.datum().cocharacters();
    require(y.contains(l1), "commutator_exponent: " + to_string(l1) + " is not in X_*(T)");
    require(y.contains(l2), "commutator_exponent: " + to_string(l2) + " is not in X_*(T)");
    Rational v = Rational(spec.level()) * form_value(spec.form(), l1, l2);
    ensure(is_integer(v), "commutator exponent not integral");
    return v.get_num();
}

Integer quadratic_q(const RootDatum &datum, const RatVector &coroot_vector) {
    require(coroot_vector.size() == datum.rank(), "quadratic_q: wrong dimension");
    require(is_integral(coroot_vector), "quadratic_q: " + to_string(coroot_vector) + " is not in the coroot lattice");
    CanonicalForm form = canonical_form(datum);
    Rational q = form_value(form, coroot_vector, coroot_vector) / 2;
    ensure(is_integer(q), "Q is not integral on the coroot lattice");
    return q.get_num();
}

LevelLineExponents level_line_exponents(const RootDatum &datum, const RatVector &lambda) {
    require(datum.cocharacters().contains(lambda), "level_line_exponents: " + to_string(lambda) + " is not in X_*(T)");
    CanonicalForm form = canonical_form(datum);
    Rational omega = Rational(form.h_dual) * form_value(form, lambda, lambda);
    RatVector weight = Rational(2 * form.h_dual) * apply_iota(form, lambda);
    ensure(is_integer(omega), "h (l, l) is not an integer");
    ensure(datum.characters().contains(weight), "2 h iota(l) is not in X^*(T)");
    return {omega.get_num(), weight};
}

Integer monodromy_modulus(const RootDatum &datum, const Integer &n) {
    require(n > 0, "N must be positive");
    Integer num = 2 * dual_coxeter(datum) * n;
    Integer d = compute_d(datum);
    ensure(num % d == 0, "d does not divide 2hN");
    return num / d;
}

bool char_assumption_ok(const RootDatum &datum, const Integer &p, const Integer &n) {
    require(n > 0, "N must be positive");
    require(p >= 0, "characteristic must be 0 or a prime");
    if (p == 0)
        return true;
    require(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0, "characteristic " + p.get_str() + " is not prime");
    return monodromy_modulus(datum, n) % p != 0;
}

} // namespace twdual
