#include "twdual/lattice.hpp"

#include "twdual/error.hpp"

#include <algorithm>
#include <optional>

namespace twdual {

namespace {

Integer abs_value(const Integer &z) { return z < 0 ? Integer(-z) : z; }

Integer tdiv(const Integer &a, const Integer &b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer fdiv(const Integer &a, const Integer &b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Smallest nonzero |entry| in the trailing block starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix &d, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            Integer a = abs_value(d(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

Integer common_denominator(const RatMatrix &m) {
    Integer l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = lcm(l, m(i, j).get_den());
    return l;
}

IntMatrix scale_to_integer(const RatMatrix &m, const Integer &scale) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = to_integer(m(i, j) * scale);
    return out;
}

RatMatrix unscale(const IntMatrix &m, const Integer &scale) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = Rational(m(i, j), scale);
            out(i, j).canonicalize();
        }
    return out;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix &m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            auto pivot = min_pivot(d, t);
            if (!pivot)
                return {u, d, v};
            d.swap_rows(t, pivot->first);
            u.swap_rows(t, pivot->first);
            d.swap_cols(t, pivot->second);
            v.swap_cols(t, pivot->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q = -tdiv(d(i, t), d(t, t));
                d.add_row(i, t, q);
                u.add_row(i, t, q);
                clean = clean && d(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q = -tdiv(d(t, j), d(t, t));
                d.add_col(j, t, q);
                v.add_col(j, t, q);
                clean = clean && d(t, j) == 0;
            }
            if (!clean)
                continue;

            // Divisibility: fold an offending row into row t and go again.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < rows && !offender; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        offender = i;
                        break;
                    }
            if (!offender)
                break;
            d.add_row(t, *offender, Integer(1));
            u.add_row(t, *offender, Integer(1));
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return {u, d, v};
}

IntMatrix hermite_normal_form(const IntMatrix &m) {
    IntMatrix h = m;
    const std::size_t rows = h.rows(), cols = h.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            std::optional<std::size_t> best;
            for (std::size_t i = r; i < rows; ++i)
                if (h(i, c) != 0 && (!best || abs_value(h(i, c)) < abs_value(h(*best, c))))
                    best = i;
            if (!best)
                break;
            h.swap_rows(r, *best);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0)
                    continue;
                h.add_row(i, r, Integer(-tdiv(h(i, c), h(r, c))));
                clean = clean && h(i, c) == 0;
            }
            if (clean)
                break;
        }
        if (h(r, c) == 0)
            continue;
        if (h(r, c) < 0)
            h.negate_row(r);
        for (std::size_t i = 0; i < r; ++i)
            h.add_row(i, r, Integer(-fdiv(h(i, c), h(r, c))));
        ++r;
    }
    IntMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out(i, j) = h(i, j);
    return out;
}

Integer AbelianInvariants::order() const {
    Integer o = 1;
    for (const auto &f : factors)
        o *= f;
    return o;
}

std::string AbelianInvariants::to_string() const {
    if (factors.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            out += " x ";
        out += "Z/" + factors[i].get_str();
    }
    return out;
}

Lattice::Lattice(RatMatrix basis) : basis_(std::move(basis)) {
    require(basis_.rows() == basis_.cols() && basis_.rows() > 0,
            "lattice basis must be square and non-empty (full rank)");
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < basis_.cols(); ++j)
            basis_(i, j).canonicalize();
    inverse_ = inverse(basis_); // throws DomainError when singular
}

Lattice Lattice::from_generators(const std::vector<RatVector> &gens, std::size_t dim) {
    require(!gens.empty(), "lattice needs at least one generator");
    RatMatrix g = rows_to_matrix(gens, dim);
    Integer scale = common_denominator(g);
    IntMatrix h = hermite_normal_form(scale_to_integer(g, scale));
    require(h.rows() == dim, "generators do not span a full-rank lattice");
    return Lattice(unscale(h, scale));
}

Lattice Lattice::standard(std::size_t dim) { return Lattice(RatMatrix::identity(dim)); }

RatVector Lattice::coordinates(const RatVector &v) const {
    require(v.size() == dim(), "vector dimension " + std::to_string(v.size()) +
                                   " does not match lattice dimension " + std::to_string(dim()));
    return row_times(v, inverse_);
}

bool Lattice::contains(const RatVector &v) const { return is_integral(coordinates(v)); }

bool Lattice::contains(const Lattice &other) const {
    if (other.dim() != dim())
        return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i)))
            return false;
    return true;
}

Lattice Lattice::canonical() const {
    Integer scale = common_denominator(basis_);
    return Lattice(unscale(hermite_normal_form(scale_to_integer(basis_, scale)), scale));
}

Rational Lattice::covolume() const {
    Rational det = determinant(basis_);
    return det < 0 ? Rational(-det) : det;
}

Lattice Lattice::scaled(const Rational &s) const {
    RatMatrix b = basis_;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            b(i, j) *= s;
    return Lattice(b);
}

bool operator==(const Lattice &a, const Lattice &b) { return a.contains(b) && b.contains(a); }

bool lattice_member(const RatVector &v, const Lattice &lattice) { return lattice.contains(v); }

Lattice dual_lattice(const Lattice &lattice, const RatMatrix &pairing) {
    require(pairing.rows() == lattice.dim() && pairing.cols() == lattice.dim(),
            "pairing shape does not match lattice dimension");
    require(determinant(pairing) != 0, "degenerate pairing");
    // Rows b_i of B; y is dual iff (B G) y is integral, so y ranges over the
    // columns of (B G)^{-1}.
    RatMatrix m = inverse(lattice.basis() * pairing);
    return Lattice(m.transpose());
}

AbelianInvariants quotient_invariants(const Lattice &big, const Lattice &small) {
    require(big.dim() == small.dim(), "lattices of different dimension");
    require(big.contains(small), "quotient_invariants: sublattice inclusion violated");
    IntMatrix change = to_integer(small.basis() * inverse(big.basis()));
    SmithForm snf = smith_normal_form(change);
    AbelianInvariants inv;
    for (std::size_t i = 0; i < snf.D.rows(); ++i) {
        ensure(snf.D(i, i) != 0, "full-rank sublattice has zero invariant factor");
        if (snf.D(i, i) != 1)
            inv.factors.push_back(snf.D(i, i));
    }
    return inv;
}

Lattice congruence_kernel(const IntMatrix &a, const Integer &n) {
    require(n > 0, "congruence_kernel: modulus N must be positive");
    SmithForm snf = smith_normal_form(a);
    // U A V = D, so A v = 0 mod N iff D w = 0 mod N for w = V^{-1} v.
    const std::size_t cols = a.cols();
    std::vector<RatVector> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        Integer scale = 1;
        if (j < snf.D.rows())
            scale = n / gcd(n, snf.D(j, j));
        RatVector v(cols);
        for (std::size_t i = 0; i < cols; ++i)
            v[i] = snf.V(i, j) * scale;
        basis.push_back(std::move(v));
    }
    return Lattice(rows_to_matrix(basis, cols));
}

Integer index(const Lattice &big, const Lattice &small) {
    return quotient_invariants(big, small).order();
}

nlohmann::json to_json(const Lattice &lattice) {
    Lattice c = lattice.canonical();
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t i = 0; i < c.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto &q : c.basis_vector(i))
            row.push_back(to_string(q));
        basis.push_back(row);
    }
    return {{"ambient_dim", c.dim()}, {"basis", basis}};
}

Lattice lattice_from_json(const nlohmann::json &j) {
    require(j.is_object() && j.contains("ambient_dim") && j.contains("basis"),
            "lattice JSON needs ambient_dim and basis");
    std::size_t dim = j.at("ambient_dim").get<std::size_t>();
    std::vector<RatVector> rows;
    for (const auto &row : j.at("basis")) {
        RatVector v;
        for (const auto &entry : row)
            v.push_back(entry.is_string() ? parse_rational(entry.get<std::string>())
                                          : Rational(entry.get<long>()));
        rows.push_back(std::move(v));
    }
    require(rows.size() == dim, "lattice JSON basis must have ambient_dim rows");
    return Lattice(rows_to_matrix(rows, dim));
}

} // namespace twdual
