#pragma once

#include "twdual/central_ext.hpp"
#include "twdual/lattice.hpp"
#include "twdual/root_data.hpp"
#include "twdual/twisted_dual.hpp"

#include <map>
#include <vector>

namespace twdual {

/// Just enough of a root datum to do character theory: simple roots in an
/// ambient weight space, simple coroots in the dual space, the pairing
/// <w, u> = w^T pairing u between them, and the weight lattice.
struct RepDatum {
    IntMatrix cartan; // A(i, j) = <roots[j], coroots[i]>
    std::vector<RatVector> roots;
    std::vector<RatVector> coroots;
    RatMatrix pairing;
    Lattice weights;

    static RepDatum of_group(const RootDatum &datum);
    static RepDatum of_dual(const TwistedDualDatum &dd);
    /// Rank-one piece of the dual at simple index i: root delta_i alpha_i,
    /// coroot alpha^_i / delta_i, weights X^*(T_N) meet Q alpha_i. The ambient
    /// coordinate t stands for t * alpha_i.
    static RepDatum rank_one(const TwistedDualDatum &dd, std::size_t i);

    std::size_t rank() const { return roots.size(); }
    std::size_t ambient_dim() const { return pairing.rows(); }
    /// <w, coroots[i]> for each i; throws DomainError if not integral.
    std::vector<long> labels(const RatVector &w) const;
    bool is_dominant(const RatVector &w) const;
};

/// Weight -> multiplicity. Zero entries are allowed (rank-one counts report
/// empty strata explicitly).
using WeightMultiplicitySet = std::map<RatVector, Integer>;

/// Weyl dimension formula. Throws DomainError for non-dominant weights or
/// weights outside the lattice.
Integer weyl_dim(const RepDatum &datum, const RatVector &highest);
/// Freudenthal recursion over dominant weights, expanded by Weyl orbits.
WeightMultiplicitySet freudenthal_multiplicities(const RepDatum &datum, const RatVector &highest);
/// Multiplicity of V(nu) in V(lambda) (x) V(mu), by peeling highest terms off
/// the product character.
Integer tensor_multiplicity(const RepDatum &datum, const RatVector &lambda, const RatVector &mu, const RatVector &nu);

/// Order 2hN/d of the twisting character; exponent e gives a trivial local
/// system iff modulus | e.
struct MonodromyModulus {
    Integer modulus;
    bool trivial(const Integer &exponent) const { return exponent % modulus == 0; }
};

/// Counts of trivial-monodromy strata of the rank-one semi-infinite
/// intersections for highest weight a * alpha_i. Keys b * alpha_i for
/// b = a, ..., -a (Y coordinates); requires d a c_i divisible by N.
WeightMultiplicitySet rank_one_mv_multiplicities(const RootDatum &source, const Integer &n, std::size_t i, long a);

/// Compares the rank-one geometric count with Freudenthal on the rank-one
/// dual datum.
bool mv_vs_character_check(const RootDatum &source, const Integer &n, std::size_t i, long a);

/// Drops zero entries.
WeightMultiplicitySet support(const WeightMultiplicitySet &m);

} // namespace twdual
