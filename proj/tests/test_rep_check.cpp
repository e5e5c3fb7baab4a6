#include "oracles.hpp"

#include "twdual/central_ext.hpp"
#include "twdual/error.hpp"
#include "twdual/rep_check.hpp"
#include "twdual/twisted_dual.hpp"

#include <doctest.h>

using namespace twdual;

namespace {

RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

RootDatum sc(CartanType t) { return build_datum(t, Isogeny::simply_connected()); }
RootDatum ad(CartanType t) { return build_datum(t, Isogeny::adjoint()); }

Integer total(const WeightMultiplicitySet &m) {
    Integer s = 0;
    for (const auto &[w, x] : m) s += x;
    return s;
}

// Dominant lattice weights with all labels at most `bound`.
std::vector<RatVector> small_dominant(const RepDatum &rd, long bound) {
    std::vector<RatVector> out;
    std::size_t r = rd.ambient_dim();
    long box = 4 * bound + 4;
    std::vector<long> k(r, -box);
    std::set<RatVector> seen;
    while (true) {
        RatVector w = zero_vector(r);
        for (std::size_t b = 0; b < r; ++b) w = w + Rational(k[b]) * rd.weights.basis_vector(b);
        if (rd.is_dominant(w)) {
            auto labels = rd.labels(w);
            if (std::all_of(labels.begin(), labels.end(), [&](long l) { return l <= bound; }) && seen.insert(w).second)
                out.push_back(w);
        }
        std::size_t b = 0;
        while (b < r && ++k[b] > box) k[b++] = -box;
        if (b == r) break;
    }
    return out;
}

void compare_with_brute(const RepDatum &rd, const RatVector &highest) {
    CAPTURE(to_string(highest));
    WeightMultiplicitySet m = freudenthal_multiplicities(rd, highest);
    CHECK(total(m) == weyl_dim(rd, highest));
    oracle::BruteCharacter brute(rd);
    for (const auto &[w, x] : m) CHECK(brute.multiplicity(highest, w) == x);
    // Weights below the highest weight that Freudenthal omits must have
    // multiplicity zero.
    for (long a = 0; a <= 6; ++a)
        for (long b = 0; b <= (rd.rank() > 1 ? 6 : 0); ++b) {
            RatVector mu = highest - Rational(a) * rd.roots[0];
            if (rd.rank() > 1) mu = mu - Rational(b) * rd.roots[1];
            if (!m.count(mu)) CHECK(brute.multiplicity(highest, mu) == 0);
        }
}

} // namespace

TEST_SUITE("rep_check") {

TEST_CASE("Weyl dimensions") {
    RepDatum a1 = RepDatum::of_group(sc({'A', 1}));
    CHECK(weyl_dim(a1, rv({0})) == 1);
    for (long n = 0; n <= 6; ++n) CHECK(weyl_dim(a1, rv({Rational(n, 2)})) == n + 1);
    RepDatum a2 = RepDatum::of_group(sc({'A', 2}));
    CHECK(weyl_dim(a2, rv({1, 1})) == 8);
    RepDatum g2 = RepDatum::of_group(sc({'G', 2}));
    // Fundamental representations of G2 have dimensions 7 and 14.
    CHECK(weyl_dim(g2, sc({'G', 2}).characters().basis_vector(0)) + weyl_dim(g2, sc({'G', 2}).characters().basis_vector(1)) == 21);
    CHECK_THROWS_AS(weyl_dim(a1, rv({-1})), DomainError);
    CHECK_THROWS_AS(weyl_dim(RepDatum::of_group(ad({'A', 1})), rv({Rational(1, 2)})), DomainError);
}

TEST_CASE("Freudenthal examples") {
    RepDatum a1 = RepDatum::of_group(sc({'A', 1}));
    CHECK(freudenthal_multiplicities(a1, rv({0})) == WeightMultiplicitySet{{rv({0}), 1}});
    CHECK(freudenthal_multiplicities(a1, rv({1})) ==
          WeightMultiplicitySet{{rv({1}), 1}, {rv({0}), 1}, {rv({-1}), 1}});
    RepDatum a2 = RepDatum::of_group(sc({'A', 2}));
    WeightMultiplicitySet adj = freudenthal_multiplicities(a2, rv({1, 1}));
    CHECK(adj.at(rv({0, 0})) == 2);
    CHECK(adj.size() == 7);
}

TEST_CASE("Freudenthal against the alternating sum") {
    for (auto t : oracle::types_up_to(2)) {
        for (const auto &datum : {sc(t), ad(t)}) {
            for (const auto &h : small_dominant(RepDatum::of_group(datum), 2)) compare_with_brute(RepDatum::of_group(datum), h);
            for (long n = 1; n <= 4; ++n) {
                CAPTURE(t.to_string());
                CAPTURE(n);
                RepDatum rd = RepDatum::of_dual(build_dual_datum(datum, n));
                for (const auto &h : small_dominant(rd, t.series == 'G' ? 2 : 4)) compare_with_brute(rd, h);
            }
        }
    }
}

TEST_CASE("tensor multiplicities") {
    RepDatum a1 = RepDatum::of_group(sc({'A', 1}));
    RatVector w = rv({Rational(1, 2)});
    CHECK(tensor_multiplicity(a1, w, w, rv({0})) == 1);
    CHECK(tensor_multiplicity(a1, w, w, rv({1})) == 1);
    CHECK(tensor_multiplicity(a1, w, w, w) == 0);
    RepDatum a2 = RepDatum::of_group(sc({'A', 2}));
    CHECK(tensor_multiplicity(a2, rv({1, 1}), rv({1, 1}), rv({1, 1})) == 2);
    CHECK(tensor_multiplicity(a2, rv({0, 0}), rv({1, 1}), rv({1, 1})) == 1);
    CHECK(tensor_multiplicity(a2, rv({0, 0}), rv({1, 1}), rv({0, 0})) == 0);
}

TEST_CASE("highest component has multiplicity one") {
    oracle::Gen gen(41);
    for (auto t : oracle::types_up_to(2)) {
        RepDatum rd = RepDatum::of_dual(build_dual_datum(sc(t), gen.uniform(1, 4)));
        auto dominant = small_dominant(rd, 2);
        for (int trial = 0; trial < 5; ++trial) {
            RatVector l = dominant[gen.uniform(0, long(dominant.size()) - 1)];
            RatVector m = dominant[gen.uniform(0, long(dominant.size()) - 1)];
            CHECK(tensor_multiplicity(rd, l, m, l + m) == 1);
        }
    }
}

TEST_CASE("rank one counts") {
    RootDatum sl2 = sc({'A', 1});
    CHECK(rank_one_mv_multiplicities(sl2, 2, 0, 2) ==
          WeightMultiplicitySet{{rv({2}), 1}, {rv({1}), 0}, {rv({0}), 1}, {rv({-1}), 0}, {rv({-2}), 1}});
    CHECK(rank_one_mv_multiplicities(sl2, 1, 0, 1) ==
          WeightMultiplicitySet{{rv({1}), 1}, {rv({0}), 1}, {rv({-1}), 1}});
    CHECK(mv_vs_character_check(sl2, 2, 0, 2));
    CHECK(mv_vs_character_check(sc({'C', 2}), 2, 0, 1));
    CHECK_THROWS_AS(rank_one_mv_multiplicities(sl2, 2, 0, 1), DomainError);
    CHECK_THROWS_AS(rank_one_mv_multiplicities(sl2, 2, 1, 2), DomainError);
    RootDatum g2 = sc({'G', 2});
    CanonicalForm f = canonical_form(g2);
    for (std::size_t i = 0; i < 2; ++i) {
        Integer a = Integer(6) / gcd(Integer(6), f.c[i]);
        CHECK(mv_vs_character_check(g2, 6, i, a.get_si()));
    }
}

TEST_CASE("rank one support size") {
    for (auto t : oracle::types_up_to(3)) {
        for (const auto &datum : {sc(t), ad(t)}) {
            CanonicalForm f = canonical_form(datum);
            Integer d = compute_d(datum);
            for (long n = 1; n <= 6; ++n)
                for (std::size_t i = 0; i < datum.rank(); ++i) {
                    Integer step = n / gcd(Integer(n), d * f.c[i]);
                    Integer del = delta(datum, n, i);
                    for (long k = 1; k <= 2; ++k) {
                        long a = Integer(k * step).get_si();
                        WeightMultiplicitySet m = rank_one_mv_multiplicities(datum, n, i, a);
                        CHECK(m.at(Rational(a) * datum.simple_coroot(i)) == 1);
                        CHECK(Integer(support(m).size()) == 2 * a / del + 1);
                    }
                }
        }
    }
}

}
