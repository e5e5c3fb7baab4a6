#include "twdual/twisted_dual.hpp"

#include "twdual/error.hpp"

#include <algorithm>
#include <functional>
#include <future>

namespace twdual {

namespace {

Lattice span_of(const std::vector<RatVector> &vs, std::size_t dim) { return Lattice(rows_to_matrix(vs, dim)); }

// Fundamental weight of the dual datum dual to simple_coroots[k]:
// <nu, simple_coroots[j]> = [j == k].
RatVector dual_fundamental_weight(const TwistedDualDatum &dd, std::size_t k) {
    const std::size_t n = dd.rank();
    RatMatrix kinv = inverse(dd.source.pairing_matrix());
    RatVector r = zero_vector(n);
    r[k] = dd.delta[k];
    return row_times(r, kinv);
}

nlohmann::json vector_json(const RatVector &v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &q : v)
        out.push_back(to_string(q));
    return out;
}

RatVector vector_from_json(const nlohmann::json &j) {
    RatVector v;
    for (const auto &e : j)
        v.push_back(e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long>()));
    return v;
}

nlohmann::json invariants_json(const AbelianInvariants &a) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &f : a.factors)
        out.push_back(f.get_si());
    return out;
}

} // namespace

bool operator==(const TwistedDualDatum &a, const TwistedDualDatum &b) {
    return a.source == b.source && a.n == b.n && a.d == b.d && a.weights == b.weights &&
           a.coweights == b.coweights && a.delta == b.delta && a.simple_roots == b.simple_roots &&
           a.simple_coroots == b.simple_coroots && a.cartan == b.cartan;
}

Lattice dual_weight_lattice(const RootDatum &datum, const Integer &n) {
    require(n > 0, "N must be positive");
    const std::size_t r = datum.rank();
    CanonicalForm form = canonical_form(datum);
    Integer d = compute_d(datum);
    const RatMatrix &by = datum.cocharacters().basis();
    // Row w (coordinates in the basis of Y) maps to w * m, the coordinates of
    // d iota(w . B_Y) in the basis of X.
    RatMatrix scaled_iota = form.iota;
    for (std::size_t i = 0; i < r; ++i)
        scaled_iota(i, i) *= d;
    RatMatrix m = by * scaled_iota * inverse(datum.characters().basis());
    Lattice kernel = congruence_kernel(to_integer(m).transpose(), n);
    return Lattice(kernel.basis() * by);
}

bool is_dominant_dual_weight(const RootDatum &datum, const Integer &n, const RatVector &lambda) {
    require(lambda.size() == datum.rank(), "weight has wrong dimension");
    for (std::size_t i = 0; i < datum.rank(); ++i)
        if (datum.pair(lambda, datum.simple_root(i)) < 0)
            return false;
    if (!datum.cocharacters().contains(lambda))
        return false;
    return dual_weight_lattice(datum, n).contains(lambda);
}

namespace {

Integer delta_from(const CanonicalForm &form, const Integer &d, const Integer &n, std::size_t i) {
    Rational norm = form.gram(i, i);
    Rational q = Rational(d) * norm / Rational(2 * n);
    q.canonicalize();
    Integer den = q.get_den();
    ensure(den == n / gcd(n, d * form.c[i]), "delta closed form disagrees with the denominator");
    return den;
}

} // namespace

Integer delta(const RootDatum &datum, const Integer &n, std::size_t i) {
    require(n > 0, "N must be positive");
    require(i < datum.rank(), "simple index " + std::to_string(i + 1) + " out of range for " +
                                  datum.type().to_string());
    return delta_from(canonical_form(datum), compute_d(datum), n, i);
}

void validate(const TwistedDualDatum &dd) {
    const std::size_t r = dd.rank();
    ensure(dd.source.cocharacters().contains(dd.weights), "dual weight lattice is not inside X_*(T)");
    ensure(dd.weights.contains(dd.source.cocharacters().scaled(Rational(dd.n))), "dual weight lattice misses N Y");
    ensure(dd.coweights == dual_lattice(dd.weights, dd.source.pairing_matrix()), "coweights are not dual to weights");
    ensure(dd.coweights.contains(dd.source.characters()), "X^*(T) does not embed in the dual coweights");
    for (std::size_t i = 0; i < r; ++i) {
        ensure(dd.weights.contains(dd.simple_roots[i]), "delta_i alpha_i is not a dual weight");
        ensure(dd.coweights.contains(dd.simple_coroots[i]), "alpha^_i / delta_i is not a dual coweight");
        ensure(dd.pair(dd.simple_roots[i], dd.simple_coroots[i]) == 2, "<root, coroot> != 2");
        for (std::size_t j = 0; j < r; ++j)
            ensure(dd.pair(dd.simple_roots[j], dd.simple_coroots[i]) == Rational(dd.cartan(i, j)),
                   "dual Cartan matrix mismatch");
    }
}

TwistedDualDatum build_dual_datum(const RootDatum &datum, const Integer &n) {
    require(n > 0, "N must be positive");
    const std::size_t r = datum.rank();
    Lattice weights = dual_weight_lattice(datum, n);
    Lattice coweights = dual_lattice(weights, datum.pairing_matrix());
    CanonicalForm form = canonical_form(datum);
    Integer d = compute_d(datum);
    std::vector<Integer> deltas;
    std::vector<RatVector> roots, coroots;
    for (std::size_t i = 0; i < r; ++i) {
        deltas.push_back(delta_from(form, d, n, i));
        roots.push_back(Rational(deltas[i]) * datum.simple_coroot(i));
        coroots.push_back(Rational(Integer(1), deltas[i]) * datum.simple_root(i));
    }
    IntMatrix cartan(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            cartan(i, j) = to_integer(Rational(deltas[j] * datum.cartan()(j, i)) / Rational(deltas[i]));
    TwistedDualDatum dd{datum,         n,     d, std::move(weights), std::move(coweights),
                        std::move(deltas), std::move(roots), std::move(coroots), std::move(cartan)};
    validate(dd);
    return dd;
}

std::optional<RecognizedType> recognize_cartan_type(const IntMatrix &cartan) {
    const std::size_t n = cartan.rows();
    if (n == 0 || cartan.cols() != n)
        return std::nullopt;
    std::vector<CartanType> candidates;
    for (char s : std::string("ABCDEFG")) {
        CartanType t{s, static_cast<int>(n)};
        try {
            t.validate();
        } catch (const DomainError &) {
            continue;
        }
        candidates.push_back(t);
    }
    for (const auto &t : candidates) {
        IntMatrix standard = cartan_matrix(t);
        std::vector<std::size_t> perm(n);
        std::vector<bool> used(n, false);
        std::function<bool(std::size_t)> place = [&](std::size_t a) -> bool {
            if (a == n)
                return true;
            for (std::size_t k = 0; k < n; ++k) {
                if (used[k])
                    continue;
                bool ok = cartan(k, k) == standard(a, a);
                for (std::size_t b = 0; b < a && ok; ++b)
                    ok = cartan(k, perm[b]) == standard(a, b) && cartan(perm[b], k) == standard(b, a);
                if (!ok)
                    continue;
                perm[a] = k;
                used[k] = true;
                if (place(a + 1))
                    return true;
                used[k] = false;
            }
            return false;
        };
        if (place(0))
            return RecognizedType{t, perm};
    }
    return std::nullopt;
}

std::optional<std::string> standard_name(CartanType type, const std::string &isogeny) {
    const int n = type.rank;
    const bool sc = isogeny == "sc", ad = isogeny == "adjoint";
    if (!sc && !ad)
        return std::nullopt;
    switch (type.series) {
    case 'A':
        if (sc)
            return "SL" + std::to_string(n + 1);
        return n == 1 ? std::string("PSL2") : "PGL" + std::to_string(n + 1);
    case 'B': return (sc ? "Spin" : "SO") + std::to_string(2 * n + 1);
    case 'C': return (sc ? "Sp" : "PSp") + std::to_string(2 * n);
    case 'D': return (sc ? "Spin" : "PSO") + std::to_string(2 * n);
    case 'E':
        if (n == 8)
            return std::string("E8");
        return type.to_string() + (sc ? "sc" : "ad");
    case 'F':
    case 'G': return type.to_string();
    }
    return std::nullopt;
}

GroupIdentity identify(const TwistedDualDatum &dd) {
    auto recognized = recognize_cartan_type(dd.cartan);
    ensure(recognized.has_value(), "dual Cartan matrix is not of finite type");
    const std::size_t r = dd.rank();
    Lattice root_lattice = span_of(dd.simple_roots, r);
    Lattice coroot_lattice = span_of(dd.simple_coroots, r);
    Lattice weight_lattice_dual = dual_lattice(coroot_lattice, dd.source.pairing_matrix().transpose());

    GroupIdentity id;
    id.cartan_type = recognized->type;
    id.perm = recognized->perm;
    id.center_chars = quotient_invariants(dd.weights, root_lattice);
    id.fundamental_group = quotient_invariants(weight_lattice_dual, dd.weights);
    ensure(id.center_chars.order() * id.fundamental_group.order() == index(weight_lattice_dual, root_lattice),
           "centre and fundamental group do not fill P/Q");
    if (dd.weights == weight_lattice_dual)
        id.isogeny = "sc";
    else if (dd.weights == root_lattice)
        id.isogeny = "adjoint";
    else
        id.isogeny = "intermediate";

    id.canonical_name = standard_name(id.cartan_type, id.isogeny);
    if (id.isogeny == "intermediate") {
        const int n = id.cartan_type.rank;
        const Integer pi1 = id.fundamental_group.order();
        auto contains_fundamental = [&](std::size_t standard_vertex) {
            return dd.weights.contains(dual_fundamental_weight(dd, id.perm[standard_vertex]));
        };
        switch (id.cartan_type.series) {
        case 'A':
            id.canonical_name = "SL" + std::to_string(n + 1) + "/mu" + pi1.get_str();
            break;
        case 'D':
            if (n % 2 == 1)
                id.canonical_name = "SO" + std::to_string(2 * n);
            else if (n == 4)
                id.canonical_name.reset(); // triality permutes the three candidates
            else if (contains_fundamental(0))
                id.canonical_name = "SO" + std::to_string(2 * n);
            else
                id.canonical_name = "HSpin" + std::to_string(2 * n);
            break;
        default:
            id.canonical_name.reset();
        }
    }
    return id;
}

TwistingLineExponents twisting_line_exponents(const TwistedDualDatum &dd, const RatVector &lambda) {
    require(is_dominant_dual_weight(dd.source, dd.n, lambda),
            "twisting_line_exponents: " + to_string(lambda) + " is not a dominant dual weight");
    CanonicalForm form = canonical_form(dd.source);
    Rational scale = Rational(dd.d) / Rational(dd.n);
    Rational omega = scale * form_value(form, lambda, lambda);
    RatVector weight = scale * apply_iota(form, lambda);
    ensure(is_integer(omega), "(d/N)(l, l) is not an integer");
    ensure(dd.source.characters().contains(weight), "(d/N) iota(l) is not in X^*(T)");
    return {omega.get_num(), weight};
}

// ---------------------------------------------------------------------------
// Examples table

namespace {

struct Expected {
    CartanType type;
    std::string isogeny;
    std::string name;
};

struct Family {
    std::string group;
    CartanType type;
    std::string isogeny;
    std::function<Expected(long)> expected;
};

CartanType normalize(CartanType t) {
    if (t.series == 'C' && t.rank == 2)
        return {'B', 2};
    if (t.series == 'D' && t.rank == 3)
        return {'A', 3};
    return t;
}

std::vector<Family> example_families() {
    std::vector<Family> fams;
    const CartanType a1{'A', 1};
    fams.push_back({"SL2", a1, "sc", [=](long n) {
                        return n % 2 == 0 ? Expected{a1, "sc", "SL2"} : Expected{a1, "adjoint", "PSL2"};
                    }});
    fams.push_back({"PSL2", a1, "adjoint", [=](long n) {
                        return n % 2 == 1 ? Expected{a1, "sc", "SL2"} : Expected{a1, "adjoint", "PSL2"};
                    }});
    for (int r : {2, 3}) {
        const CartanType c{'C', r}, b{'B', r};
        const std::string sp = "Sp" + std::to_string(2 * r), so = "SO" + std::to_string(2 * r + 1);
        fams.push_back({sp, c, "sc", [=](long n) {
                            return n % 2 == 1 ? Expected{b, "adjoint", so} : Expected{c, "sc", sp};
                        }});
    }
    for (int r : {2, 3, 4}) {
        const CartanType c{'C', r}, b{'B', r};
        const std::string spin = "Spin" + std::to_string(2 * r + 1), so = "SO" + std::to_string(2 * r + 1);
        const std::string psp = "Sp" + std::to_string(2 * r) + "/{+-1}";
        fams.push_back({spin, b, "sc", [=](long n) {
                            if (n % 2 == 1)
                                return Expected{c, "adjoint", psp};
                            if ((r * n / 2) % 2 == 0)
                                return Expected{b, "sc", spin};
                            return Expected{b, "adjoint", so};
                        }});
    }
    for (CartanType t : {CartanType{'G', 2}, CartanType{'F', 4}, CartanType{'E', 8}})
        fams.push_back({t.to_string(), t, "sc", [=](long) { return Expected{t, "sc", t.to_string()}; }});
    const CartanType e6{'E', 6}, e7{'E', 7};
    fams.push_back({"E6sc", e6, "sc", [=](long n) {
                        return n % 3 == 0 ? Expected{e6, "sc", "E6sc"} : Expected{e6, "adjoint", "E6ad"};
                    }});
    fams.push_back({"E7sc", e7, "sc", [=](long n) {
                        return n % 2 == 0 ? Expected{e7, "sc", "E7sc"} : Expected{e7, "adjoint", "E7ad"};
                    }});
    return fams;
}

ExampleRow compute_row(const Family &fam, long n) {
    RootDatum datum = build_datum(fam.type, Isogeny::parse(fam.isogeny));
    GroupIdentity id = identify(build_dual_datum(datum, n));
    Expected exp = fam.expected(n);
    // Groups with a trivial centre and no proper isogeny quotient are both sc
    // and adjoint.
    auto same_class = [](const std::string &a, const std::string &b, const GroupIdentity &g) {
        return a == b || (g.center_chars.trivial() && g.fundamental_group.trivial());
    };
    bool pass = normalize(id.cartan_type) == normalize(exp.type) && same_class(id.isogeny, exp.isogeny, id);
    std::string dual = id.canonical_name.value_or(id.cartan_type.to_string() + " " + id.isogeny);
    return {fam.group, fam.isogeny, n, dual, exp.name, pass};
}

} // namespace

std::vector<ExampleRow> examples_table(long n_max) {
    require(n_max >= 1, "Nmax must be positive");
    std::vector<std::future<ExampleRow>> jobs;
    for (const auto &fam : example_families())
        for (long n = 1; n <= n_max; ++n)
            jobs.push_back(std::async(std::launch::async, [fam, n] { return compute_row(fam, n); }));
    std::vector<ExampleRow> rows;
    for (auto &j : jobs)
        rows.push_back(j.get());
    return rows;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const GroupIdentity &id) {
    nlohmann::json j = {
        {"dual_type", id.cartan_type.to_string()},
        {"dual_isogeny", id.isogeny},
        {"center", invariants_json(id.center_chars)},
        {"pi1", invariants_json(id.fundamental_group)},
    };
    if (id.canonical_name)
        j["name"] = *id.canonical_name;
    return j;
}

nlohmann::json to_json(const TwistedDualDatum &dd) {
    nlohmann::json deltas = nlohmann::json::array(), roots = nlohmann::json::array(),
                   coroots = nlohmann::json::array(), cartan = nlohmann::json::array();
    for (std::size_t i = 0; i < dd.rank(); ++i) {
        deltas.push_back(dd.delta[i].get_si());
        roots.push_back(vector_json(dd.simple_roots[i]));
        coroots.push_back(vector_json(dd.simple_coroots[i]));
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < dd.rank(); ++j)
            row.push_back(dd.cartan(i, j).get_si());
        cartan.push_back(row);
    }
    nlohmann::json j = {
        {"source", to_json(dd.source)},
        {"N", dd.n.get_si()},
        {"d", dd.d.get_si()},
        {"delta", deltas},
        {"dual_weight_lattice", to_json(dd.weights)},
        {"dual_coweight_lattice", to_json(dd.coweights)},
        {"dual_simple_roots", roots},
        {"dual_simple_coroots", coroots},
        {"dual_cartan_matrix", cartan},
    };
    j.update(to_json(identify(dd)));
    return j;
}

TwistedDualDatum twisted_dual_from_json(const nlohmann::json &j) {
    for (const char *key : {"source", "N", "d", "delta", "dual_weight_lattice", "dual_coweight_lattice",
                            "dual_simple_roots", "dual_simple_coroots", "dual_cartan_matrix"})
        require(j.contains(key), std::string("dual datum JSON is missing '") + key + "'");
    RootDatum source = root_datum_from_json(j.at("source"));
    const std::size_t r = source.rank();
    std::vector<Integer> deltas;
    for (const auto &x : j.at("delta"))
        deltas.push_back(Integer(x.get<long>()));
    std::vector<RatVector> roots, coroots;
    for (const auto &v : j.at("dual_simple_roots"))
        roots.push_back(vector_from_json(v));
    for (const auto &v : j.at("dual_simple_coroots"))
        coroots.push_back(vector_from_json(v));
    require(deltas.size() == r && roots.size() == r && coroots.size() == r, "dual datum JSON has wrong rank");
    IntMatrix cartan(r, r);
    const auto &cj = j.at("dual_cartan_matrix");
    require(cj.size() == r, "dual Cartan matrix has wrong size");
    for (std::size_t a = 0; a < r; ++a) {
        require(cj[a].size() == r, "dual Cartan matrix has wrong size");
        for (std::size_t b = 0; b < r; ++b)
            cartan(a, b) = cj[a][b].get<long>();
    }
    TwistedDualDatum dd{std::move(source),
                        Integer(j.at("N").get<long>()),
                        Integer(j.at("d").get<long>()),
                        lattice_from_json(j.at("dual_weight_lattice")),
                        lattice_from_json(j.at("dual_coweight_lattice")),
                        std::move(deltas),
                        std::move(roots),
                        std::move(coroots),
                        std::move(cartan)};
    try {
        validate(dd);
    } catch (const InternalError &e) {
        throw DomainError(std::string("dual datum JSON is inconsistent: ") + e.what());
    }
    return dd;
}

} // namespace twdual
