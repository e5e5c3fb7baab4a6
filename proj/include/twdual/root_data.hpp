#pragma once

#include "twdual/arith.hpp"
#include "twdual/lattice.hpp"
#include "twdual/matrix.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace twdual {

/// Cartan type of an irreducible reduced root system, e.g. C3 or E8.
struct CartanType {
    char series = 'A';
    int rank = 1;

    /// Throws DomainError for unknown series or out-of-range rank.
    static CartanType parse(std::string_view text);
    void validate() const;
    std::string to_string() const;

    friend auto operator<=>(const CartanType &, const CartanType &) = default;
};

/// K(i, j) = <alpha_i, alpha^_j>: simple coroot i paired with simple root j.
/// Bourbaki numbering, indices from 0.
IntMatrix cartan_matrix(CartanType type);

/// All roots and coroots, in simple-root and simple-coroot coordinates
/// respectively. roots[k] and coroots[k] correspond to each other.
struct RootSystem {
    CartanType type;
    IntMatrix cartan;
    std::vector<std::vector<long>> roots;
    std::vector<std::vector<long>> coroots;

    std::size_t size() const { return roots.size(); }
    static bool is_positive(const std::vector<long> &v);
};

/// Closure of the simple roots under simple reflections. Memoized; safe to
/// call from several threads.
std::shared_ptr<const RootSystem> build_root_system(CartanType type);

/// Which lattice between Q and P is the character lattice.
struct Isogeny {
    enum class Kind { SimplyConnected, Adjoint, Orthogonal, Quotient };
    Kind kind = Kind::SimplyConnected;
    /// For Quotient: extra generators of X modulo Q, in simple-root coordinates.
    std::vector<RatVector> generators;

    /// "sc" | "adjoint" | "so" | "quotient:[[..],[..]]"
    static Isogeny parse(std::string_view text);
    static Isogeny simply_connected() { return {Kind::SimplyConnected, {}}; }
    static Isogeny adjoint() { return {Kind::Adjoint, {}}; }
    std::string to_string() const;
};

/// Root datum of an almost simple group. X-side vectors are written in the
/// basis of simple roots, Y-side vectors in the basis of simple coroots, and
/// <y, x> = y^T K x with K the Cartan matrix.
class RootDatum {
  public:
    RootDatum(CartanType type, Lattice characters, std::string isogeny_label);

    CartanType type() const { return type_; }
    std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
    const IntMatrix &cartan() const { return cartan_; }
    const RatMatrix &pairing_matrix() const { return pairing_; }
    const Lattice &characters() const { return x_; }   // X^*(T)
    const Lattice &cocharacters() const { return y_; } // X_*(T)
    const std::string &isogeny_label() const { return isogeny_label_; }
    std::shared_ptr<const RootSystem> roots() const { return build_root_system(type_); }

    RatVector simple_root(std::size_t i) const { return unit_vector(rank(), i); }
    RatVector simple_coroot(std::size_t i) const { return unit_vector(rank(), i); }

    /// <y, x> for y in Y (coroot coords) and x in X (root coords).
    Rational pair(const RatVector &y, const RatVector &x) const;

    friend bool operator==(const RootDatum &a, const RootDatum &b) {
        return a.type_ == b.type_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

  private:
    CartanType type_;
    IntMatrix cartan_;
    RatMatrix pairing_;
    Lattice x_;
    Lattice y_;
    std::string isogeny_label_;
};

/// Weight lattice P in simple-root coordinates (spanned by fundamental weights).
Lattice weight_lattice(CartanType type);
/// Coweight lattice in simple-coroot coordinates.
Lattice coweight_lattice(CartanType type);

/// Throws DomainError if the generators do not lie in P.
RootDatum build_datum(CartanType type, const Isogeny &isogeny);

/// The W-invariant form on Y normalised so that short coroots have norm 2,
/// together with iota : Y -> X (x) Q and the dual Coxeter number.
struct CanonicalForm {
    RatMatrix gram;         // (alpha_i, alpha_j)
    std::vector<Integer> c; // (alpha_i, alpha_i) / 2
    RatMatrix iota;         // iota(y) = row_times(y, iota)
    Integer h_dual;
};

CanonicalForm canonical_form(const RootDatum &datum);
/// Half-norms c_i, computed by symmetrising the Cartan matrix.
std::vector<Integer> coroot_half_norms(const IntMatrix &cartan);
/// Solves 2 h iota(l) = sum_{roots} <l, a> a for every basis vector l of Y.
Integer dual_coxeter(const RootDatum &datum);

RatVector apply_iota(const CanonicalForm &form, const RatVector &y);
/// (y1, y2) for Y-side vectors.
Rational form_value(const CanonicalForm &form, const RatVector &y1, const RatVector &y2);

/// pi_1(G) = Y / coroot lattice.
AbelianInvariants fundamental_group(const RootDatum &datum);
/// Characters of the centre: X / root lattice.
AbelianInvariants center_character_group(const RootDatum &datum);
/// Sum of the positive roots, in simple-root coordinates.
RatVector two_rho(const RootDatum &datum);

nlohmann::json to_json(const RootDatum &datum);
RootDatum root_datum_from_json(const nlohmann::json &j);

} // namespace twdual
