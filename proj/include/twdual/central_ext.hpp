#pragma once

#include "twdual/lattice.hpp"
#include "twdual/root_data.hpp"

#include <memory>

namespace twdual {

/// Smallest d > 0 with d * iota(Y) contained in X. Minimality is re-checked
/// against every proper divisor.
Integer compute_d(const RootDatum &datum);

/// Central extensions of G(F) by G_m: one per level m in dZ, each with
/// automorphism group Hom(pi_1(G), mu_infinity).
struct ExtensionClassification {
    Integer d;
    Integer h_dual;
    AbelianInvariants automorphisms; // pi_1(G)
    std::string levels() const { return d.get_str() + "Z"; }
};

ExtensionClassification classify_extensions(const RootDatum &datum);

/// A central extension at level m, carried by the commutator form m(.,.) on Y.
class ExtensionSpec {
  public:
    /// Throws DomainError unless d divides m.
    ExtensionSpec(RootDatum datum, Integer level);
    /// The determinant extension E^a, level 2h.
    static ExtensionSpec determinant(RootDatum datum);

    const RootDatum &datum() const { return *datum_; }
    const CanonicalForm &form() const { return form_; }
    const Integer &d() const { return d_; }
    const Integer &level() const { return level_; }
    /// m * (alpha_i, alpha_j); integral.
    const IntMatrix &commutator_form() const { return commutator_form_; }

  private:
    std::shared_ptr<const RootDatum> datum_;
    CanonicalForm form_;
    Integer d_;
    Integer level_;
    IntMatrix commutator_form_;
};

/// m (l1, l2) for l1, l2 in Y. Throws DomainError for vectors outside Y.
Integer commutator_exponent(const ExtensionSpec &spec, const RatVector &l1, const RatVector &l2);

/// Q(l) = (l, l) / 2 on the coroot lattice. Throws DomainError outside it.
Integer quadratic_q(const RootDatum &datum, const RatVector &coroot_vector);

/// Exponents of the fibre of the determinant line bundle over the orbit of
/// l: omega_exp = h (l, l) and bundle_weight = 2 h iota(l) in X.
struct LevelLineExponents {
    Integer omega_exp;
    RatVector bundle_weight;
};

LevelLineExponents level_line_exponents(const RootDatum &datum, const RatVector &lambda);

/// 2 h N / d, the order of the twisting character.
Integer monodromy_modulus(const RootDatum &datum, const Integer &n);

/// True iff p = 0 or p does not divide 2 h N / d. Throws DomainError for N <= 0
/// or p neither 0 nor prime.
bool char_assumption_ok(const RootDatum &datum, const Integer &p, const Integer &n);

} // namespace twdual
