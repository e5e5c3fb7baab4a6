#include "twdual/root_data.hpp"

#include "twdual/error.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <set>

namespace twdual {

namespace {

// Euclidean inner products of simple roots, scaled to be integral. Only used
// to write down the Cartan matrix; everything downstream works from K.
std::vector<std::vector<long>> simple_root_products(CartanType t) {
    const int n = t.rank;
    std::vector<std::vector<long>> b(n, std::vector<long>(n, 0));
    auto edge = [&](int i, int j, long v) { b[i][j] = b[j][i] = v; };
    switch (t.series) {
    case 'A':
        for (int i = 0; i < n; ++i)
            b[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i)
            edge(i, i + 1, -1);
        break;
    case 'B': // alpha_n short
        for (int i = 0; i < n; ++i)
            b[i][i] = i + 1 < n ? 4 : 2;
        for (int i = 0; i + 1 < n; ++i)
            edge(i, i + 1, -2);
        break;
    case 'C': // alpha_n long
        for (int i = 0; i < n; ++i)
            b[i][i] = i + 1 < n ? 2 : 4;
        for (int i = 0; i + 2 < n; ++i)
            edge(i, i + 1, -1);
        edge(n - 2, n - 1, -2);
        break;
    case 'D':
        for (int i = 0; i < n; ++i)
            b[i][i] = 2;
        for (int i = 0; i + 2 < n; ++i)
            edge(i, i + 1, -1);
        edge(n - 3, n - 1, -1);
        break;
    case 'E':
        for (int i = 0; i < n; ++i)
            b[i][i] = 2;
        edge(0, 2, -1);
        edge(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i)
            edge(i, i + 1, -1);
        break;
    case 'F':
        b[0][0] = b[1][1] = 4;
        b[2][2] = b[3][3] = 2;
        edge(0, 1, -2);
        edge(1, 2, -2);
        edge(2, 3, -1);
        break;
    case 'G': // alpha_1 short
        b[0][0] = 2;
        b[1][1] = 6;
        edge(0, 1, -3);
        break;
    default:
        throw DomainError(std::string("unknown Cartan series '") + t.series + "'");
    }
    return b;
}

std::string vector_list_to_string(const std::vector<RatVector> &vs) {
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ",";
        out += twdual::to_string(vs[i]);
    }
    return out + "]";
}

} // namespace

// ---------------------------------------------------------------------------
// CartanType

void CartanType::validate() const {
    bool ok = false;
    switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default:
        throw DomainError(std::string("unknown Cartan series '") + series + "'");
    }
    require(ok, "invalid rank " + std::to_string(rank) + " for series " + series);
}

CartanType CartanType::parse(std::string_view text) {
    require(text.size() >= 2, "malformed Cartan type '" + std::string(text) + "'");
    char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    std::string_view digits = text.substr(1);
    for (char ch : digits)
        require(std::isdigit(static_cast<unsigned char>(ch)),
                "malformed Cartan type '" + std::string(text) + "'");
    require(digits.size() <= 3, "Cartan rank too large in '" + std::string(text) + "'");
    CartanType t{s, std::stoi(std::string(digits))};
    t.validate();
    return t;
}

std::string CartanType::to_string() const { return std::string(1, series) + std::to_string(rank); }

IntMatrix cartan_matrix(CartanType type) {
    type.validate();
    auto b = simple_root_products(type);
    const std::size_t n = static_cast<std::size_t>(type.rank);
    IntMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ensure((2 * b[i][j]) % b[i][i] == 0, "non-integral Cartan entry");
            k(i, j) = 2 * b[i][j] / b[i][i];
        }
    return k;
}

// ---------------------------------------------------------------------------
// Root systems

bool RootSystem::is_positive(const std::vector<long> &v) {
    for (long x : v)
        if (x != 0)
            return x > 0;
    return false;
}

std::shared_ptr<const RootSystem> build_root_system(CartanType type) {
    type.validate();
    static std::mutex mutex;
    static std::map<CartanType, std::shared_ptr<const RootSystem>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(type); it != cache.end())
            return it->second;
    }

    auto rs = std::make_shared<RootSystem>();
    rs->type = type;
    rs->cartan = cartan_matrix(type);
    const std::size_t n = static_cast<std::size_t>(type.rank);
    std::vector<std::vector<long>> k(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            k[i][j] = rs->cartan(i, j).get_si();

    // Reflect (root, coroot) pairs together so the correspondence is kept.
    std::map<std::vector<long>, std::vector<long>> seen;
    std::deque<std::pair<std::vector<long>, std::vector<long>>> queue;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        seen.emplace(e, e);
        queue.emplace_back(e, e);
    }
    while (!queue.empty()) {
        auto [root, coroot] = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            long root_label = 0;   // <alpha_i, root>
            long coroot_label = 0; // <coroot, alpha^_i>
            for (std::size_t j = 0; j < n; ++j) {
                root_label += k[i][j] * root[j];
                coroot_label += coroot[j] * k[j][i];
            }
            auto r2 = root;
            auto c2 = coroot;
            r2[i] -= root_label;
            c2[i] -= coroot_label;
            if (seen.emplace(r2, c2).second)
                queue.emplace_back(std::move(r2), std::move(c2));
        }
    }
    for (auto &[root, coroot] : seen) {
        rs->roots.push_back(root);
        rs->coroots.push_back(coroot);
    }
    ensure(rs->roots.size() % 2 == 0, "root system not closed under negation");

    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(type, std::move(rs));
    return it->second;
}

// ---------------------------------------------------------------------------
// Isogenies and data

Isogeny Isogeny::parse(std::string_view text) {
    if (text == "sc")
        return simply_connected();
    if (text == "adjoint" || text == "ad")
        return adjoint();
    if (text == "so")
        return {Kind::Orthogonal, {}};
    constexpr std::string_view prefix = "quotient:";
    require(text.substr(0, prefix.size()) == prefix,
            "unknown isogeny '" + std::string(text) + "' (expected sc, adjoint, so or quotient:[...])");
    std::string_view body = text.substr(prefix.size());
    Isogeny iso{Kind::Quotient, {}};
    // Either a single vector "[a,b]" or a list "[[a,b],[c,d]]".
    if (body.size() >= 2 && body[0] == '[' && body[1] == '[') {
        require(body.back() == ']', "unbalanced brackets in isogeny '" + std::string(text) + "'");
        body = body.substr(1, body.size() - 2);
        std::size_t pos = 0;
        while (pos < body.size()) {
            auto open = body.find('[', pos);
            if (open == std::string_view::npos)
                break;
            auto close = body.find(']', open);
            require(close != std::string_view::npos, "unbalanced brackets in isogeny");
            iso.generators.push_back(parse_rat_vector(body.substr(open, close - open + 1)));
            pos = close + 1;
        }
    } else {
        iso.generators.push_back(parse_rat_vector(body));
    }
    require(!iso.generators.empty(), "quotient isogeny needs at least one generator");
    return iso;
}

std::string Isogeny::to_string() const {
    switch (kind) {
    case Kind::SimplyConnected: return "sc";
    case Kind::Adjoint: return "adjoint";
    case Kind::Orthogonal: return "so";
    case Kind::Quotient: return "quotient:" + vector_list_to_string(generators);
    }
    return "?";
}

Lattice weight_lattice(CartanType type) {
    RatMatrix kinv = inverse(to_rational(cartan_matrix(type)));
    return Lattice(kinv.transpose());
}

Lattice coweight_lattice(CartanType type) { return Lattice(inverse(to_rational(cartan_matrix(type)))); }

RootDatum::RootDatum(CartanType type, Lattice characters, std::string isogeny_label)
    : type_(type), cartan_(cartan_matrix(type)), pairing_(to_rational(cartan_)), x_(std::move(characters)),
      y_(dual_lattice(x_, pairing_.transpose())), isogeny_label_(std::move(isogeny_label)) {
    require(x_.dim() == rank(), "character lattice has wrong dimension");
    require(x_.contains(Lattice::standard(rank())), "character lattice must contain the root lattice");
    require(weight_lattice(type_).contains(x_), "character lattice must lie in the weight lattice");
}

Rational RootDatum::pair(const RatVector &y, const RatVector &x) const { return bilinear(y, pairing_, x); }

RootDatum build_datum(CartanType type, const Isogeny &isogeny) {
    type.validate();
    const std::size_t n = static_cast<std::size_t>(type.rank);
    Lattice p = weight_lattice(type);
    switch (isogeny.kind) {
    case Isogeny::Kind::SimplyConnected:
        return RootDatum(type, p, "sc");
    case Isogeny::Kind::Adjoint:
        return RootDatum(type, Lattice::standard(n), "adjoint");
    case Isogeny::Kind::Orthogonal: {
        if (type.series == 'B')
            return RootDatum(type, Lattice::standard(n), "so");
        require(type.series == 'D', "isogeny 'so' is only defined for types B and D");
        std::vector<RatVector> gens;
        for (std::size_t i = 0; i < n; ++i)
            gens.push_back(unit_vector(n, i));
        gens.push_back(p.basis_vector(0)); // first fundamental weight
        return RootDatum(type, Lattice::from_generators(gens, n), "so");
    }
    case Isogeny::Kind::Quotient: {
        std::vector<RatVector> gens;
        for (std::size_t i = 0; i < n; ++i)
            gens.push_back(unit_vector(n, i));
        for (const auto &g : isogeny.generators) {
            require(g.size() == n, "isogeny generator " + to_string(g) + " has wrong dimension for " +
                                       type.to_string());
            require(p.contains(g), "isogeny generator " + to_string(g) + " is not in the weight lattice");
            gens.push_back(g);
        }
        return RootDatum(type, Lattice::from_generators(gens, n), isogeny.to_string());
    }
    }
    throw DomainError("unknown isogeny kind");
}

// ---------------------------------------------------------------------------
// Canonical form

std::vector<Integer> coroot_half_norms(const IntMatrix &cartan) {
    const std::size_t n = cartan.rows();
    std::vector<Rational> c(n, Rational(0));
    c[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || cartan(i, j) == 0 || c[j] != 0)
                continue;
            c[j] = c[i] * Rational(cartan(j, i)) / Rational(cartan(i, j));
            queue.push_back(j);
        }
    }
    Rational smallest = c[0];
    for (const auto &x : c) {
        ensure(x > 0, "Dynkin diagram is not connected");
        if (x < smallest)
            smallest = x;
    }
    std::vector<Integer> out;
    for (const auto &x : c)
        out.push_back(to_integer(x / smallest));
    return out;
}

RatVector apply_iota(const CanonicalForm &form, const RatVector &y) { return row_times(y, form.iota); }

Rational form_value(const CanonicalForm &form, const RatVector &y1, const RatVector &y2) {
    return bilinear(y1, form.gram, y2);
}

namespace {

Integer dual_coxeter_uncached(const RootDatum &datum) {
    const std::size_t n = datum.rank();
    auto c = coroot_half_norms(datum.cartan());
    auto rs = datum.roots();
    std::optional<Rational> twice_h;
    for (std::size_t b = 0; b < n; ++b) {
        RatVector lambda = datum.cocharacters().basis_vector(b);
        RatVector sum = zero_vector(n);
        for (const auto &root : rs->roots) {
            RatVector r(root.begin(), root.end());
            Rational p = datum.pair(lambda, r);
            if (p != 0)
                sum = sum + p * r;
        }
        RatVector iota(n);
        for (std::size_t i = 0; i < n; ++i)
            iota[i] = lambda[i] * c[i];
        if (!twice_h) {
            for (std::size_t i = 0; i < n; ++i)
                if (iota[i] != 0) {
                    twice_h = sum[i] / iota[i];
                    break;
                }
        }
        ensure(twice_h.has_value(), "iota vanished on a basis vector");
        ensure(sum == *twice_h * iota, "sum over roots is not proportional to iota");
    }
    Rational h = *twice_h / 2;
    ensure(is_integer(h) && h > 0, "dual Coxeter number is not a positive integer");
    return h.get_num();
}

} // namespace

// Keyed by type and the canonical basis of Y.
Integer dual_coxeter(const RootDatum &datum) {
    static std::mutex mutex;
    static std::map<std::pair<CartanType, std::string>, Integer> cache;
    auto key = std::make_pair(datum.type(), to_json(datum.cocharacters()).dump());
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    Integer h = dual_coxeter_uncached(datum);
    std::lock_guard lock(mutex);
    cache.emplace(key, h);
    return h;
}

CanonicalForm canonical_form(const RootDatum &datum) {
    const std::size_t n = datum.rank();
    CanonicalForm form;
    form.c = coroot_half_norms(datum.cartan());
    form.gram = RatMatrix(n, n);
    form.iota = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        form.iota(i, i) = form.c[i];
        for (std::size_t j = 0; j < n; ++j)
            form.gram(i, j) = Rational(form.c[j] * datum.cartan()(i, j));
    }
    ensure(form.gram == form.gram.transpose(), "canonical form is not symmetric");
    form.h_dual = dual_coxeter(datum);
    return form;
}

AbelianInvariants fundamental_group(const RootDatum &datum) {
    return quotient_invariants(datum.cocharacters(), Lattice::standard(datum.rank()));
}

AbelianInvariants center_character_group(const RootDatum &datum) {
    return quotient_invariants(datum.characters(), Lattice::standard(datum.rank()));
}

RatVector two_rho(const RootDatum &datum) {
    RatVector sum = zero_vector(datum.rank());
    for (const auto &root : datum.roots()->roots)
        if (RootSystem::is_positive(root))
            sum = sum + RatVector(root.begin(), root.end());
    return sum;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const RootDatum &datum) {
    const std::size_t n = datum.rank();
    nlohmann::json cartan = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(datum.cartan()(i, j).get_si());
        cartan.push_back(row);
    }
    nlohmann::json roots = nlohmann::json::array(), coroots = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto &q : datum.simple_root(i))
            r.push_back(to_string(q));
        roots.push_back(r);
        coroots.push_back(r);
    }
    return {
        {"cartan_type", datum.type().to_string()},
        {"isogeny", datum.isogeny_label()},
        {"cartan_matrix", cartan},
        {"X", to_json(datum.characters())},
        {"Y", to_json(datum.cocharacters())},
        {"simple_roots", roots},
        {"simple_coroots", coroots},
    };
}

RootDatum root_datum_from_json(const nlohmann::json &j) {
    require(j.is_object() && j.contains("cartan_type") && j.contains("X"), "root datum JSON needs cartan_type and X");
    CartanType type = CartanType::parse(j.at("cartan_type").get<std::string>());
    std::string label = j.value("isogeny", std::string("quotient"));
    RootDatum datum(type, lattice_from_json(j.at("X")), label);
    if (j.contains("Y"))
        require(lattice_from_json(j.at("Y")) == datum.cocharacters(), "root datum JSON: Y is not the dual of X");
    return datum;
}

} // namespace twdual
