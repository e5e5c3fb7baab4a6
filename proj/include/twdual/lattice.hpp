#pragma once

#include "twdual/arith.hpp"
#include "twdual/matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace twdual {

/// Result of a Smith normal form computation: U * M * V = D.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

/// U and V are unimodular; D is diagonal with nonnegative entries d_i | d_{i+1}.
SmithForm smith_normal_form(const IntMatrix &m);

/// Row-style Hermite normal form of the row span of m, zero rows dropped.
/// Pivots are positive and entries above a pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix &m);

/// A finite abelian group given by invariant factors, each >= 2, each
/// dividing the next. Empty means trivial.
struct AbelianInvariants {
    std::vector<Integer> factors;

    Integer order() const;
    bool trivial() const { return factors.empty(); }
    std::string to_string() const;
    friend bool operator==(const AbelianInvariants &, const AbelianInvariants &) = default;
};

/// Full-rank lattice in Q^n. Basis vectors are stored as rows.
class Lattice {
  public:
    /// Throws DomainError unless `basis` is square and invertible.
    explicit Lattice(RatMatrix basis);

    /// Lattice spanned by a (possibly redundant) generating set. Throws
    /// DomainError if the span is not full rank.
    static Lattice from_generators(const std::vector<RatVector> &gens, std::size_t dim);
    static Lattice standard(std::size_t dim);

    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix &basis() const { return basis_; }
    RatVector basis_vector(std::size_t i) const { return basis_.row(i); }

    /// Coordinates of v in this basis.
    RatVector coordinates(const RatVector &v) const;
    bool contains(const RatVector &v) const;
    bool contains(const Lattice &other) const;

    /// Hermite-normalised basis; identical for equal lattices.
    Lattice canonical() const;
    /// |det(basis)|, the covolume.
    Rational covolume() const;

    Lattice scaled(const Rational &s) const;

    /// Equality of lattices, i.e. mutual containment.
    friend bool operator==(const Lattice &a, const Lattice &b);

  private:
    RatMatrix basis_;
    RatMatrix inverse_;
};

bool lattice_member(const RatVector &v, const Lattice &lattice);

/// {y : x^T G y in Z for all x in L}. Throws DomainError when G is degenerate.
Lattice dual_lattice(const Lattice &lattice, const RatMatrix &pairing);

/// Invariant factors of big/small. Throws DomainError unless small is in big.
AbelianInvariants quotient_invariants(const Lattice &big, const Lattice &small);

/// {v in Z^cols : A v in N Z^rows}. Throws DomainError for N <= 0.
Lattice congruence_kernel(const IntMatrix &a, const Integer &n);

/// [big : small]. Throws DomainError unless small is in big.
Integer index(const Lattice &big, const Lattice &small);

nlohmann::json to_json(const Lattice &lattice);
Lattice lattice_from_json(const nlohmann::json &j);

} // namespace twdual
