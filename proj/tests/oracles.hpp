#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the character or dual-datum code it is used to check.

#include "twdual/lattice.hpp"
#include "twdual/rep_check.hpp"
#include "twdual/root_data.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>

namespace oracle {

using twdual::Integer;
using twdual::IntMatrix;
using twdual::Rational;
using twdual::RatMatrix;
using twdual::RatVector;
using twdual::operator+;
using twdual::operator-;
using twdual::operator*;

inline IntMatrix int_rows(const std::vector<std::vector<long>> &rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

inline std::vector<twdual::CartanType> types_up_to(int max_rank) {
    std::vector<twdual::CartanType> out;
    for (int n = 1; n <= max_rank; ++n) {
        out.push_back({'A', n});
        if (n >= 2) out.push_back({'B', n});
        if (n >= 3) out.push_back({'C', n});
        if (n >= 4) out.push_back({'D', n});
    }
    for (int n : {6, 7, 8})
        if (n <= max_rank) out.push_back({'E', n});
    if (max_rank >= 4) out.push_back({'F', 4});
    if (max_rank >= 2) out.push_back({'G', 2});
    return out;
}

// Classical table of dual Coxeter numbers.
inline long h_dual_table(twdual::CartanType t) {
    long n = t.rank;
    switch (t.series) {
    case 'A': return n + 1;
    case 'B': return 2 * n - 1;
    case 'C': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    case 'F': return 9;
    default: return 4;
    }
}

// Number of roots: n(n+1), 2n^2, 2n^2, 2n(n-1), 72, 126, 240, 48, 12.
inline std::size_t root_count_table(twdual::CartanType t) {
    std::size_t n = t.rank;
    switch (t.series) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    default: return 12;
    }
}

// Langlands dual (type, isogeny) of an sc or adjoint form.
inline std::pair<twdual::CartanType, std::string> langlands_dual(twdual::CartanType t, const std::string &iso) {
    twdual::CartanType u = t;
    if (t.series == 'B' && t.rank >= 3) u.series = 'C';
    if (t.series == 'C' && t.rank >= 3) u.series = 'B';
    // B2 = C2 are reported as B2 by recognition.
    if (t.series == 'C' && t.rank == 2) u.series = 'B';
    if (t.series == 'D' && t.rank == 3) u = {'A', 3};
    bool self_dual = (t.series == 'E' && t.rank == 8) || t.series == 'F' || t.series == 'G';
    std::string v = self_dual ? "sc" : iso == "sc" ? "adjoint" : "sc";
    return {u, v};
}

// {v in Z^r mod N : A v = 0 mod N}, lifted: the set of residues.
inline std::set<std::vector<long>> congruence_residues(const IntMatrix &a, long n) {
    std::set<std::vector<long>> out;
    std::size_t r = a.cols();
    std::vector<long> v(r, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == r) {
            for (std::size_t i = 0; i < a.rows(); ++i) {
                Integer s = 0;
                for (std::size_t j = 0; j < r; ++j) s += a(i, j) * v[j];
                if (s % n != 0) return;
            }
            out.insert(v);
            return;
        }
        for (long x = 0; x < n; ++x) {
            v[k] = x;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

inline Rational pairing(const twdual::RepDatum &rd, const RatVector &w, const RatVector &u) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) s += w[i] * rd.pairing(i, j) * u[j];
    return s;
}

inline RatVector reflect(const twdual::RepDatum &rd, std::size_t i, const RatVector &w) {
    Rational k = pairing(rd, w, rd.coroots[i]);
    RatVector out = w;
    for (std::size_t j = 0; j < w.size(); ++j) out[j] -= k * rd.roots[i][j];
    return out;
}

// Weyl group as a list of (element as a function on weights given by a word, sign).
struct WeylElement {
    std::vector<std::size_t> word;
    int sign;
};

inline RatVector act(const twdual::RepDatum &rd, const WeylElement &w, RatVector v) {
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) v = reflect(rd, *it, v);
    return v;
}

// Elements are distinguished by their action on a regular weight.
inline std::vector<WeylElement> weyl_group(const twdual::RepDatum &rd, const RatVector &regular) {
    std::vector<WeylElement> out{{{}, 1}};
    std::set<RatVector> seen{regular};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t i = 0; i < rd.rank(); ++i) {
            WeylElement e = out[k];
            e.word.insert(e.word.begin(), i);
            e.sign = -e.sign;
            RatVector image = act(rd, e, regular);
            if (seen.insert(image).second) out.push_back(e);
        }
    }
    return out;
}

// Coordinates of a weight in the basis of simple roots (roots are a basis
// of the ambient space in every datum used here).
inline RatVector root_coords(const twdual::RepDatum &rd, const RatVector &w) {
    RatMatrix b(rd.rank(), rd.rank());
    for (std::size_t i = 0; i < rd.rank(); ++i)
        for (std::size_t j = 0; j < rd.rank(); ++j) b(i, j) = rd.roots[i][j];
    return twdual::row_times(w, twdual::inverse(b));
}

struct BruteCharacter {
    const twdual::RepDatum &rd;
    std::vector<std::vector<long>> positive; // in simple-root coordinates
    RatVector rho;
    std::vector<WeylElement> weyl;
    std::map<std::pair<std::size_t, std::vector<long>>, Integer> memo;

    explicit BruteCharacter(const twdual::RepDatum &d) : rd(d) {
        std::size_t r = rd.rank();
        std::set<RatVector> roots;
        std::vector<RatVector> queue(rd.roots.begin(), rd.roots.end());
        while (!queue.empty()) {
            RatVector v = queue.back();
            queue.pop_back();
            if (!roots.insert(v).second) continue;
            for (std::size_t i = 0; i < r; ++i) queue.push_back(reflect(rd, i, v));
        }
        rho = twdual::zero_vector(rd.ambient_dim());
        for (const auto &v : roots) {
            RatVector c = root_coords(rd, v);
            bool pos = true;
            std::vector<long> k;
            for (const auto &q : c) {
                pos = pos && q >= 0;
                k.push_back(twdual::to_integer(q).get_si());
            }
            if (!pos) continue;
            positive.push_back(k);
            rho = rho + Rational(1, 2) * v;
        }
        RatVector regular = rho;
        weyl = weyl_group(rd, regular);
    }

    // Kostant partition function of a vector in simple-root coordinates.
    Integer kostant(std::size_t from, const std::vector<long> &v) {
        for (long x : v)
            if (x < 0) return 0;
        if (from == positive.size()) {
            for (long x : v)
                if (x != 0) return 0;
            return 1;
        }
        auto key = std::make_pair(from, v);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer total = 0;
        std::vector<long> rest = v;
        while (true) {
            total += kostant(from + 1, rest);
            bool ok = true;
            for (std::size_t j = 0; j < rest.size(); ++j) {
                rest[j] -= positive[from][j];
                ok = ok && rest[j] >= 0;
            }
            if (!ok) break;
        }
        memo[key] = total;
        return total;
    }

    Integer multiplicity(const RatVector &highest, const RatVector &mu) {
        Integer total = 0;
        RatVector shifted = highest + rho;
        for (const auto &w : weyl) {
            RatVector diff = act(rd, w, shifted) - (mu + rho);
            RatVector c = root_coords(rd, diff);
            std::vector<long> k;
            bool integral = true;
            for (const auto &q : c) {
                if (!twdual::is_integer(q)) {
                    integral = false;
                    break;
                }
                k.push_back(twdual::to_integer(q).get_si());
            }
            if (!integral) continue;
            total += w.sign * kostant(0, k);
        }
        return total;
    }
};

// Deterministic generators for the property tests.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    bool coin() { return uniform(0, 1) == 1; }

    IntMatrix int_matrix(std::size_t r, std::size_t c, long bound) {
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(-bound, bound);
        return m;
    }

    // A random full-rank rational lattice basis.
    RatMatrix lattice_basis(std::size_t n) {
        while (true) {
            RatMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    m(i, j) = Rational(uniform(-6, 6), uniform(1, 4));
                    m(i, j).canonicalize();
                }
            if (twdual::determinant(m) != 0) return m;
        }
    }
};

} // namespace oracle
