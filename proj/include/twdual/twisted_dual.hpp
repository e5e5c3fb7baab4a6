#pragma once

#include "twdual/central_ext.hpp"
#include "twdual/lattice.hpp"
#include "twdual/root_data.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace twdual {

/// Root datum of the twisted dual group at twisting N. Its weights live in
/// Y (simple-coroot coordinates), its coweights in X (x) Q (simple-root
/// coordinates), and they pair through the source Cartan matrix.
struct TwistedDualDatum {
    RootDatum source;
    Integer n;
    Integer d;
    Lattice weights;   // {nu in Y : d iota(nu) in N X}
    Lattice coweights; // pairing-dual of `weights`
    std::vector<Integer> delta;
    std::vector<RatVector> simple_roots;   // delta_i alpha_i
    std::vector<RatVector> simple_coroots; // alpha^_i / delta_i
    /// K'(i, j) = <simple_roots[j], simple_coroots[i]> = (delta_j / delta_i) K(j, i).
    IntMatrix cartan;

    std::size_t rank() const { return source.rank(); }
    /// <nu, x> for nu a dual weight and x a dual coweight.
    Rational pair(const RatVector &nu, const RatVector &x) const { return source.pair(nu, x); }

    friend bool operator==(const TwistedDualDatum &a, const TwistedDualDatum &b);
};

/// {nu in Y : d iota(nu) in N X}, via congruence_kernel on the integer
/// matrix of d * iota. Throws DomainError for N <= 0.
Lattice dual_weight_lattice(const RootDatum &datum, const Integer &n);

/// Dominant for G and contained in dual_weight_lattice.
bool is_dominant_dual_weight(const RootDatum &datum, const Integer &n, const RatVector &lambda);

/// Denominator of d (alpha_i, alpha_i) / 2N in lowest terms.
Integer delta(const RootDatum &datum, const Integer &n, std::size_t i);

/// Assembles the dual datum and asserts every structural invariant.
TwistedDualDatum build_dual_datum(const RootDatum &datum, const Integer &n);
/// Re-checks the invariants of an assembled datum; throws InternalError.
void validate(const TwistedDualDatum &dd);

/// Recognises a finite-type Cartan matrix. perm[a] is the row of `cartan`
/// playing the role of Bourbaki vertex a; the lexicographically smallest
/// such permutation is returned. B2 is preferred over C2 and A3 over D3.
struct RecognizedType {
    CartanType type;
    std::vector<std::size_t> perm;
};
std::optional<RecognizedType> recognize_cartan_type(const IntMatrix &cartan);

struct GroupIdentity {
    CartanType cartan_type;
    std::vector<std::size_t> perm;
    AbelianInvariants center_chars;     // X^*(T_N) / dual root lattice
    AbelianInvariants fundamental_group; // dual weight lattice / X^*(T_N)
    std::string isogeny;                // "sc", "adjoint" or "intermediate"
    std::optional<std::string> canonical_name;
};

GroupIdentity identify(const TwistedDualDatum &dd);

/// Conventional name of a group given by type and isogeny class, e.g.
/// (C3, adjoint) -> PSp6. Empty for intermediate quotients.
std::optional<std::string> standard_name(CartanType type, const std::string &isogeny);

/// ((d/N)(l, l), (d/N) iota(l)) for l in X^{*+}(T_N).
struct TwistingLineExponents {
    Integer omega_exp;
    RatVector bundle_weight;
};
TwistingLineExponents twisting_line_exponents(const TwistedDualDatum &dd, const RatVector &lambda);

/// One row of the reproduction of the published examples.
struct ExampleRow {
    std::string group;
    std::string isogeny;
    long n;
    std::string dual;
    std::string expected;
    bool pass;
};

/// Every family from the published examples at small rank, N = 1..n_max.
/// Rows are computed concurrently and returned in a fixed order.
std::vector<ExampleRow> examples_table(long n_max);

nlohmann::json to_json(const TwistedDualDatum &dd);
nlohmann::json to_json(const GroupIdentity &id);
TwistedDualDatum twisted_dual_from_json(const nlohmann::json &j);

} // namespace twdual
