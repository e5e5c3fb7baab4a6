// One line per acceptance criterion; exit status 1 if any line fails.

#include "oracles.hpp"

#include "twdual/central_ext.hpp"
#include "twdual/cli.hpp"
#include "twdual/loop_symbols.hpp"
#include "twdual/rep_check.hpp"
#include "twdual/twisted_dual.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

using namespace twdual;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string &why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::vector<RootDatum> sc_and_adjoint(CartanType t) {
    return {build_datum(t, Isogeny::simply_connected()), build_datum(t, Isogeny::adjoint())};
}

std::vector<RootDatum> all_forms(CartanType t) {
    auto out = sc_and_adjoint(t);
    if (t.series == 'B' || t.series == 'D') out.push_back(build_datum(t, Isogeny::parse("so")));
    if (t.series == 'A' && t.rank >= 3) {
        // Every intermediate quotient SL_{n+1} / mu_k.
        Lattice p = weight_lattice(t);
        for (int k = 2; k <= t.rank; ++k)
            if ((t.rank + 1) % k == 0)
                out.push_back(build_datum(t, {Isogeny::Kind::Quotient, {Rational((t.rank + 1) / k) * p.basis_vector(0)}}));
    }
    return out;
}

std::string label(const RootDatum &d) { return d.type().to_string() + "/" + d.isogeny_label(); }

Outcome examples_table_reproduction() {
    Outcome o;
    std::ostringstream out, err;
    int code = cli::run({"table", "--Nmax", "6", "--paper-check"}, out, err);
    std::istringstream lines(out.str());
    std::string line;
    int rows = 0, passed = 0;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
        ++rows;
        if (line.size() >= 4 && line.substr(line.size() - 4) == "pass") ++passed;
    }
    if (code != 0) o.fail("exit code " + std::to_string(code));
    if (rows != passed) o.fail(std::to_string(rows - passed) + " rows disagree");
    o.detail = o.pass ? std::to_string(rows) + " rows, all pass" : o.detail;
    return o;
}

Outcome d_values() {
    Outcome o;
    int count = 0;
    if (compute_d(build_datum({'A', 1}, Isogeny::adjoint())) != 2) o.fail("d(PSL2) != 2");
    for (auto t : oracle::types_up_to(8)) {
        if (compute_d(build_datum(t, Isogeny::simply_connected())) != 1) o.fail("d != 1 for sc " + t.to_string());
        for (const auto &datum : all_forms(t)) {
            Integer d = compute_d(datum), h = dual_coxeter(datum);
            ++count;
            if (h % d != 0 || (2 * h) % d != 0) o.fail("d does not divide h for " + label(datum));
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " root data";
    return o;
}

Outcome sum_over_roots_identity() {
    Outcome o;
    int count = 0;
    for (auto t : oracle::types_up_to(8)) {
        for (const auto &datum : all_forms(t)) {
            CanonicalForm f = canonical_form(datum);
            auto rs = datum.roots();
            for (std::size_t b = 0; b < datum.rank(); ++b) {
                RatVector l = datum.cocharacters().basis_vector(b);
                RatVector sum = zero_vector(datum.rank());
                for (const auto &root : rs->roots) {
                    RatVector x(root.begin(), root.end());
                    sum = sum + datum.pair(l, x) * x;
                }
                ++count;
                if (sum != Rational(2) * Rational(f.h_dual) * apply_iota(f, l)) o.fail("identity fails for " + label(datum));
                if (f.h_dual != oracle::h_dual_table(t)) o.fail("dual Coxeter number of " + t.to_string());
            }
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " basis coweights";
    return o;
}

Outcome classical_recovery() {
    Outcome o;
    int count = 0;
    for (auto t : oracle::types_up_to(4)) {
        for (std::string iso : {"sc", "adjoint"}) {
            GroupIdentity id = identify(build_dual_datum(build_datum(t, Isogeny::parse(iso)), 1));
            auto [type, isogeny] = oracle::langlands_dual(t, iso);
            ++count;
            if (id.cartan_type != type || id.isogeny != isogeny)
                o.fail(t.to_string() + " " + iso + " gave " + id.cartan_type.to_string() + " " + id.isogeny);
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " forms";
    return o;
}

LaurentSeries random_series(oracle::Gen &gen, const CoefficientField &field, long precision) {
    auto coefficient = [&] {
        return field.is_rationals() ? Rational(gen.uniform(-9, 9), gen.uniform(1, 5))
                                    : Rational(gen.uniform(0, long(field.characteristic()) - 1));
    };
    std::vector<Rational> c;
    for (long k = 0; k < precision; ++k) c.push_back(coefficient());
    while (field.normalize(c[0]) == 0) c[0] = coefficient();
    return LaurentSeries(field, gen.uniform(-3, 3), c, precision);
}

const std::vector<CoefficientField> &fields() {
    static const std::vector<CoefficientField> f{CoefficientField::rationals(), CoefficientField::prime(5),
                                                 CoefficientField::prime(7)};
    return f;
}

Outcome tame_symbol_laws() {
    Outcome o;
    oracle::Gen gen(501);
    int count = 0;
    for (const auto &k : fields()) {
        for (int trial = 0; trial < 400; ++trial) {
            LaurentSeries f1 = random_series(gen, k, 8), f2 = random_series(gen, k, 8), g = random_series(gen, k, 8);
            ++count;
            if (tame_symbol(f1 * f2, g) != k.mul(tame_symbol(f1, g), tame_symbol(f2, g)))
                o.fail("bimultiplicativity over " + k.to_string());
            if (tame_symbol(g, f1 * f2) != k.mul(tame_symbol(g, f1), tame_symbol(g, f2)))
                o.fail("bimultiplicativity (right) over " + k.to_string());
            if (k.mul(tame_symbol(f1, g), tame_symbol(g, f1)) != 1) o.fail("antisymmetry over " + k.to_string());
            if (tame_symbol(f1, -f1) != 1) o.fail("(f,-f) over " + k.to_string());
            if (tame_symbol(f1, LaurentSeries::one(k, 16) - f1) != 1) o.fail("Steinberg over " + k.to_string());
            LaurentSeries near_one = LaurentSeries::one(k, 8) - f2 * LaurentSeries::monomial(k, 1, 2, 8);
            if (tame_symbol(near_one, LaurentSeries::one(k, 16) - near_one) != 1)
                o.fail("Steinberg near 1 over " + k.to_string());
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " random triples";
    return o;
}

Outcome torus_commutator_checks() {
    Outcome o;
    oracle::Gen gen(601);
    int count = 0;
    for (auto t : oracle::types_up_to(4)) {
        for (const auto &datum : all_forms(t)) {
            Integer d = compute_d(datum);
            CanonicalForm form = canonical_form(datum);
            const Lattice &y = datum.cocharacters();
            auto random_coweight = [&] {
                RatVector v = zero_vector(datum.rank());
                for (std::size_t b = 0; b < datum.rank(); ++b) v = v + Rational(gen.uniform(-3, 3)) * y.basis_vector(b);
                return v;
            };
            for (const auto &k : fields()) {
                ExtensionSpec spec(datum, d * gen.uniform(1, 3));
                for (int trial = 0; trial < 3; ++trial) {
                    RatVector l1 = random_coweight(), l1b = random_coweight(), l2 = random_coweight();
                    LaurentSeries f = random_series(gen, k, 8), g = random_series(gen, k, 8);
                    Rational c = torus_commutator(spec, {{{l1, f}}}, {{{l2, g}}});
                    ++count;
                    if (c != k.power(tame_symbol(f, g), commutator_exponent(spec, l1, l2)))
                        o.fail("commutator differs from symbol power for " + label(datum));
                    Rational sum = torus_commutator(spec, {{{l1 + l1b, f}}}, {{{l2, g}}});
                    if (sum != k.mul(c, torus_commutator(spec, {{{l1b, f}}}, {{{l2, g}}})))
                        o.fail("not bilinear for " + label(datum));
                }
            }
            // Integrality of m(.,.) on Y holds exactly for m in dZ.
            for (long m = 1; m <= 2 * d.get_si(); ++m) {
                bool integral = true;
                for (std::size_t i = 0; i < datum.rank() && integral; ++i)
                    for (std::size_t j = 0; j < datum.rank() && integral; ++j)
                        integral = is_integer(m * form_value(form, y.basis_vector(i), y.basis_vector(j)));
                if (integral != (m % d == 0)) o.fail("integrality at m=" + std::to_string(m) + " for " + label(datum));
                bool rejected = false;
                try {
                    ExtensionSpec(datum, m);
                } catch (const DomainError &) {
                    rejected = true;
                }
                if (rejected == (m % d == 0)) o.fail("level check at m=" + std::to_string(m) + " for " + label(datum));
            }
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " commutators";
    return o;
}

Outcome mv_against_characters() {
    Outcome o;
    int count = 0;
    for (auto t : oracle::types_up_to(3)) {
        for (const auto &datum : sc_and_adjoint(t)) {
            CanonicalForm f = canonical_form(datum);
            Integer d = compute_d(datum);
            for (long n = 1; n <= 6; ++n)
                for (std::size_t i = 0; i < datum.rank(); ++i) {
                    Integer step = n / gcd(Integer(n), d * f.c[i]);
                    for (long k = 1; k <= 2; ++k) {
                        ++count;
                        if (!mv_vs_character_check(datum, n, i, Integer(k * step).get_si()))
                            o.fail(label(datum) + " N=" + std::to_string(n) + " i=" + std::to_string(i + 1));
                    }
                }
        }
    }
    if (count < 200) o.fail("only " + std::to_string(count) + " instances");
    if (o.pass) o.detail = std::to_string(count) + " instances";
    return o;
}

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

Outcome multiplicity_one() {
    Outcome o;
    oracle::Gen gen(801);
    int count = 0;
    for (auto t : oracle::types_up_to(2)) {
        for (const auto &datum : sc_and_adjoint(t)) {
            for (long n = 1; n <= 4; ++n) {
                RepDatum rd = RepDatum::of_dual(build_dual_datum(datum, n));
                auto dominant = small_dominant(rd, 2);
                for (int trial = 0; trial < 5; ++trial) {
                    RatVector l = dominant[gen.uniform(0, long(dominant.size()) - 1)];
                    RatVector m = dominant[gen.uniform(0, long(dominant.size()) - 1)];
                    ++count;
                    if (tensor_multiplicity(rd, l, m, l + m) != 1) o.fail("multiplicity != 1 for " + label(datum));
                }
            }
        }
    }
    if (count < 100) o.fail("only " + std::to_string(count) + " pairs");
    if (o.pass) o.detail = std::to_string(count) + " pairs";
    return o;
}

Outcome structural_invariants() {
    Outcome o;
    int count = 0;
    for (auto t : oracle::types_up_to(8)) {
        for (const auto &datum : sc_and_adjoint(t)) {
            for (long n = 1; n <= 8; ++n) {
                TwistedDualDatum dd = build_dual_datum(datum, n);
                ++count;
                std::string where = label(datum) + " N=" + std::to_string(n);
                if (dd.rank() != datum.rank()) o.fail("rank changes for " + where);
                for (std::size_t i = 0; i < dd.rank(); ++i) {
                    if (!dd.weights.contains(dd.simple_roots[i])) o.fail("root outside lattice for " + where);
                    for (std::size_t b = 0; b < dd.rank(); ++b) {
                        RatVector nu = dd.weights.basis_vector(b);
                        Rational p = datum.pair(nu, datum.simple_root(i));
                        if (!is_integer(p / dd.delta[i])) o.fail("coroot pairing not in delta Z for " + where);
                        RatVector r1 = nu - dd.pair(nu, dd.simple_coroots[i]) * dd.simple_roots[i];
                        RatVector r2 = nu - p * datum.simple_coroot(i);
                        if (r1 != r2) o.fail("reflections differ for " + where);
                        if (!dd.weights.contains(r1)) o.fail("reflection leaves lattice for " + where);
                    }
                }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " dual data";
    return o;
}

Outcome freudenthal_against_brute_force() {
    Outcome o;
    int count = 0;
    auto check = [&](const RepDatum &rd, const std::string &where) {
        oracle::BruteCharacter brute(rd);
        for (const auto &h : small_dominant(rd, 3)) {
            WeightMultiplicitySet m = freudenthal_multiplicities(rd, h);
            Integer total = 0;
            for (const auto &[w, x] : m) {
                total += x;
                if (brute.multiplicity(h, w) != x) o.fail("multiplicity mismatch for " + where);
            }
            ++count;
            if (total != weyl_dim(rd, h)) o.fail("sum != Weyl dimension for " + where);
        }
    };
    for (auto t : oracle::types_up_to(2)) {
        for (const auto &datum : sc_and_adjoint(t)) {
            check(RepDatum::of_group(datum), label(datum));
            for (long n = 1; n <= 4; ++n) check(RepDatum::of_dual(build_dual_datum(datum, n)), label(datum) + " dual");
        }
    }
    // Sum rule beyond rank two.
    for (auto t : oracle::types_up_to(4)) {
        RepDatum rd = RepDatum::of_group(build_datum(t, Isogeny::simply_connected()));
        for (std::size_t b = 0; b < rd.ambient_dim(); ++b) {
            RatVector h = rd.weights.basis_vector(b);
            if (!rd.is_dominant(h)) continue;
            Integer total = 0;
            for (const auto &[w, x] : freudenthal_multiplicities(rd, h)) total += x;
            ++count;
            if (total != weyl_dim(rd, h)) o.fail("sum != Weyl dimension for " + t.to_string());
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " highest weights";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char *name;
        Outcome (*run)();
        double budget_seconds;
    };
    const Criterion criteria[] = {
        {"examples table reproduction", examples_table_reproduction, 30},
        {"d values", d_values, 0},
        {"sum over roots identity", sum_over_roots_identity, 5},
        {"N=1 recovers the Langlands dual", classical_recovery, 0},
        {"tame symbol laws", tame_symbol_laws, 0},
        {"torus commutator", torus_commutator_checks, 0},
        {"rank-one MV count vs characters", mv_against_characters, 60},
        {"highest component multiplicity one", multiplicity_one, 0},
        {"dual datum structural invariants", structural_invariants, 0},
        {"Freudenthal vs alternating sum", freudenthal_against_brute_force, 0},
    };
    bool all = true;
    int index = 0;
    for (const auto &c : criteria) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds > c.budget_seconds)
            o.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
        all = all && o.pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.pass ? "PASS" : "FAIL") << "  " << index << ". " << c.name << " (" << o.detail << ", " << seconds
             << " s)";
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
