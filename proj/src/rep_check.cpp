#include "twdual/rep_check.hpp"

#include "twdual/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace twdual {

namespace {

using Labels = std::vector<long>;

// Character theory in Dynkin-label coordinates, driven by the Cartan matrix
// alone.
class CharacterEngine {
  public:
    explicit CharacterEngine(const IntMatrix &cartan) : n_(cartan.rows()), a_(n_, std::vector<long>(n_)) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                a_[i][j] = cartan(i, j).get_si();
        a_inv_ = inverse(to_rational(cartan));

        // Root norms up to scale: norm_i A(i, j) = norm_j A(j, i).
        std::vector<Rational> norm(n_, Rational(0));
        norm[0] = 2;
        std::deque<std::size_t> queue{0};
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < n_; ++j)
                if (j != i && a_[i][j] != 0 && norm[j] == 0) {
                    norm[j] = norm[i] * a_[i][j] / a_[j][i];
                    queue.push_back(j);
                }
        }
        form_ = RatMatrix(n_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            ensure(norm[i] > 0, "Cartan matrix is not indecomposable");
            for (std::size_t j = 0; j < n_; ++j)
                form_(i, j) = Rational(a_[i][j]) * norm[i] / 2;
        }
        ensure(form_ == form_.transpose(), "Cartan matrix is not symmetrisable");

        // Positive roots in simple-root coordinates.
        std::set<Labels> seen;
        std::deque<Labels> q;
        for (std::size_t i = 0; i < n_; ++i) {
            Labels e(n_, 0);
            e[i] = 1;
            seen.insert(e);
            q.push_back(e);
        }
        while (!q.empty()) {
            Labels beta = q.front();
            q.pop_front();
            for (std::size_t i = 0; i < n_; ++i) {
                Labels r = beta;
                r[i] -= label_of_root(beta, i);
                if (std::all_of(r.begin(), r.end(), [](long x) { return x >= 0; }) &&
                    std::any_of(r.begin(), r.end(), [](long x) { return x > 0; }) && seen.insert(r).second)
                    q.push_back(r);
            }
        }
        for (const auto &beta : seen) {
            positive_roots_.push_back(beta);
            Labels lab(n_);
            for (std::size_t i = 0; i < n_; ++i)
                lab[i] = label_of_root(beta, i);
            positive_root_labels_.push_back(lab);
        }
        rho_.assign(n_, 1);
    }

    std::size_t rank() const { return n_; }

    // Root-coordinate vector of a weight with the given labels.
    RatVector root_coords(const Labels &w) const {
        RatVector v(w.begin(), w.end());
        return times_col(a_inv_, v);
    }
    Rational inner(const Labels &x, const Labels &y) const { return bilinear(root_coords(x), form_, root_coords(y)); }
    Rational height(const Labels &w) const {
        RatVector q = root_coords(w);
        return std::accumulate(q.begin(), q.end(), Rational(0));
    }

    static bool dominant(const Labels &w) {
        return std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
    }

    Labels reflect(const Labels &w, std::size_t i) const {
        Labels out = w;
        for (std::size_t j = 0; j < n_; ++j)
            out[j] -= w[i] * a_[j][i];
        return out;
    }

    Labels dominant_conjugate(Labels w) const {
        while (true) {
            auto it = std::find_if(w.begin(), w.end(), [](long x) { return x < 0; });
            if (it == w.end())
                return w;
            w = reflect(w, static_cast<std::size_t>(it - w.begin()));
        }
    }

    std::vector<Labels> orbit(const Labels &w) const {
        std::set<Labels> seen{w};
        std::deque<Labels> q{w};
        while (!q.empty()) {
            Labels x = q.front();
            q.pop_front();
            for (std::size_t i = 0; i < n_; ++i) {
                Labels y = reflect(x, i);
                if (seen.insert(y).second)
                    q.push_back(y);
            }
        }
        return {seen.begin(), seen.end()};
    }

    Labels add(const Labels &x, const Labels &y, long scale = 1) const {
        Labels out = x;
        for (std::size_t i = 0; i < n_; ++i)
            out[i] += scale * y[i];
        return out;
    }

    Integer weyl_dim(const Labels &lambda) const {
        Labels lr = add(lambda, rho_);
        Rational dim = 1;
        for (const auto &beta : positive_root_labels_)
            dim *= inner(lr, beta) / inner(rho_, beta);
        ensure(is_integer(dim), "Weyl dimension is not an integer");
        return dim.get_num();
    }

    std::map<Labels, Integer> character(const Labels &lambda) const {
        // Dominant weights below lambda, with their depth.
        std::map<Labels, long> depth{{lambda, 0}};
        std::deque<Labels> q{lambda};
        while (!q.empty()) {
            Labels mu = q.front();
            q.pop_front();
            for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
                Labels nu = add(mu, positive_root_labels_[k], -1);
                if (!dominant(nu) || depth.count(nu))
                    continue;
                long h = 0;
                for (long x : positive_roots_[k])
                    h += x;
                depth[nu] = depth[mu] + h;
                q.push_back(nu);
            }
        }
        std::vector<Labels> order;
        for (const auto &[mu, h] : depth)
            order.push_back(mu);
        std::stable_sort(order.begin(), order.end(), [&](const Labels &x, const Labels &y) {
            Rational hx = height(x), hy = height(y);
            return hx > hy || (hx == hy && x < y);
        });

        const Labels lr = add(lambda, rho_);
        const Rational top = inner(lr, lr);
        std::map<Labels, Integer> dom;
        for (const auto &mu : order) {
            if (mu == lambda) {
                dom[mu] = 1;
                continue;
            }
            Rational num = 0;
            for (const auto &beta : positive_root_labels_) {
                for (long k = 1;; ++k) {
                    Labels nu = add(mu, beta, k);
                    Labels dnu = dominant_conjugate(nu);
                    if (!depth.count(dnu))
                        break; // weight strings are unbroken
                    auto it = dom.find(dnu);
                    ensure(it != dom.end(), "Freudenthal visited weights out of order");
                    num += Rational(it->second) * inner(nu, beta);
                }
            }
            Labels mr = add(mu, rho_);
            Rational den = top - inner(mr, mr);
            ensure(den != 0, "Freudenthal denominator vanished");
            Rational m = 2 * num / den;
            ensure(is_integer(m) && m > 0, "Freudenthal produced a non-positive or fractional multiplicity");
            dom[mu] = m.get_num();
        }

        std::map<Labels, Integer> full;
        for (const auto &[mu, m] : dom)
            for (const auto &w : orbit(mu))
                full[w] = m;
        return full;
    }

  private:
    long label_of_root(const Labels &beta, std::size_t i) const {
        long s = 0;
        for (std::size_t j = 0; j < n_; ++j)
            s += a_[i][j] * beta[j];
        return s;
    }

    std::size_t n_;
    std::vector<std::vector<long>> a_;
    RatMatrix a_inv_;
    RatMatrix form_;
    std::vector<Labels> positive_roots_;
    std::vector<Labels> positive_root_labels_;
    Labels rho_;
};

Labels checked_dominant_labels(const RepDatum &datum, const RatVector &w) {
    require(w.size() == datum.ambient_dim(), "weight " + to_string(w) + " has wrong dimension");
    require(datum.weights.contains(w), "weight " + to_string(w) + " is not in the weight lattice");
    Labels lab = datum.labels(w);
    require(CharacterEngine::dominant(lab), "weight " + to_string(w) + " is not dominant");
    return lab;
}

// Ambient vector of the weight with labels `w` in the character of V(highest).
RatVector ambient_of(const RepDatum &datum, const CharacterEngine &engine, const RatVector &highest,
                     const Labels &highest_labels, const Labels &w) {
    Labels diff = engine.add(highest_labels, w, -1);
    RatVector k = engine.root_coords(diff);
    RatVector out = highest;
    for (std::size_t j = 0; j < datum.rank(); ++j) {
        ensure(is_integer(k[j]), "weight is not in the root coset of the highest weight");
        if (k[j] != 0)
            out = out - k[j] * datum.roots[j];
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// RepDatum

RepDatum RepDatum::of_group(const RootDatum &datum) {
    const std::size_t r = datum.rank();
    RepDatum rd{datum.cartan(), {}, {}, datum.pairing_matrix().transpose(), datum.characters()};
    for (std::size_t i = 0; i < r; ++i) {
        rd.roots.push_back(datum.simple_root(i));
        rd.coroots.push_back(datum.simple_coroot(i));
    }
    return rd;
}

RepDatum RepDatum::of_dual(const TwistedDualDatum &dd) {
    return RepDatum{dd.cartan, dd.simple_roots, dd.simple_coroots, dd.source.pairing_matrix(), dd.weights};
}

RepDatum RepDatum::rank_one(const TwistedDualDatum &dd, std::size_t i) {
    require(i < dd.rank(), "simple index out of range");
    // Generator of X^*(T_N) meet Q alpha_i: 1 / content of alpha_i's coordinates.
    RatVector coords = dd.weights.coordinates(dd.source.simple_coroot(i));
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto &x : coords) {
        num_gcd = gcd(num_gcd, x.get_num());
        den_lcm = lcm(den_lcm, x.get_den());
    }
    Rational generator(den_lcm, num_gcd);
    generator.canonicalize();
    if (generator < 0)
        generator = -generator;
    IntMatrix cartan(1, 1);
    cartan(0, 0) = 2;
    RatMatrix pairing(1, 1);
    pairing(0, 0) = dd.source.cartan()(i, i); // <t alpha_i, u alpha^_i> = 2 t u
    RatMatrix lat(1, 1);
    lat(0, 0) = generator;
    Rational coroot(Integer(1), dd.delta[i]);
    return RepDatum{cartan, {RatVector{Rational(dd.delta[i])}}, {RatVector{coroot}}, pairing, Lattice(lat)};
}

std::vector<long> RepDatum::labels(const RatVector &w) const {
    std::vector<long> out;
    for (const auto &u : coroots) {
        Rational p = bilinear(w, pairing, u);
        require(is_integer(p), "weight " + to_string(w) + " pairs non-integrally with a coroot");
        require(p.get_num().fits_slong_p(), "weight label out of range");
        out.push_back(p.get_num().get_si());
    }
    return out;
}

bool RepDatum::is_dominant(const RatVector &w) const {
    for (const auto &u : coroots)
        if (bilinear(w, pairing, u) < 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Characters

Integer weyl_dim(const RepDatum &datum, const RatVector &highest) {
    Labels lab = checked_dominant_labels(datum, highest);
    return CharacterEngine(datum.cartan).weyl_dim(lab);
}

WeightMultiplicitySet freudenthal_multiplicities(const RepDatum &datum, const RatVector &highest) {
    Labels lab = checked_dominant_labels(datum, highest);
    CharacterEngine engine(datum.cartan);
    WeightMultiplicitySet out;
    for (const auto &[w, m] : engine.character(lab))
        out[ambient_of(datum, engine, highest, lab, w)] = m;
    return out;
}

Integer tensor_multiplicity(const RepDatum &datum, const RatVector &lambda, const RatVector &mu, const RatVector &nu) {
    Labels l = checked_dominant_labels(datum, lambda);
    Labels m = checked_dominant_labels(datum, mu);
    Labels target = checked_dominant_labels(datum, nu);
    CharacterEngine engine(datum.cartan);

    std::map<Labels, Integer> product;
    auto cl = engine.character(l), cm = engine.character(m);
    for (const auto &[a, x] : cl)
        for (const auto &[b, y] : cm)
            product[engine.add(a, b)] += x * y;

    Integer result = 0;
    while (true) {
        std::erase_if(product, [](const auto &kv) { return kv.second == 0; });
        if (product.empty())
            break;
        // A dominant weight of maximal height is maximal in the dominance order.
        const Labels *top = nullptr;
        Rational top_height;
        for (const auto &[w, x] : product) {
            if (!CharacterEngine::dominant(w))
                continue;
            Rational h = engine.height(w);
            if (!top || h > top_height) {
                top = &w;
                top_height = h;
            }
        }
        ensure(top != nullptr, "character has weights but no dominant weight");
        Labels peak = *top;
        Integer coeff = product[peak];
        ensure(coeff > 0, "negative multiplicity while peeling a tensor product");
        if (peak == target)
            result = coeff;
        for (const auto &[w, x] : engine.character(peak))
            product[w] -= coeff * x;
    }
    return result;
}

WeightMultiplicitySet support(const WeightMultiplicitySet &m) {
    WeightMultiplicitySet out;
    for (const auto &[w, x] : m)
        if (x != 0)
            out.emplace(w, x);
    return out;
}

// ---------------------------------------------------------------------------
// Rank one

WeightMultiplicitySet rank_one_mv_multiplicities(const RootDatum &source, const Integer &n, std::size_t i, long a) {
    require(n > 0, "N must be positive");
    require(i < source.rank(), "simple index " + std::to_string(i + 1) + " out of range for " +
                                   source.type().to_string());
    require(a > 0, "a must be positive");
    CanonicalForm form = canonical_form(source);
    Integer d = compute_d(source);
    const Integer &c = form.c[i];
    require((d * a * c) % n == 0, "a = " + std::to_string(a) + " violates (d a / 2N)(alpha_i, alpha_i) in Z");

    MonodromyModulus modulus{monodromy_modulus(source, n)};
    Integer step = delta(source, n, i);
    RatVector highest = Rational(a) * source.simple_coroot(i);
    ensure(dual_weight_lattice(source, n).contains(highest), "a alpha_i is not a dual weight");

    WeightMultiplicitySet out;
    for (long b = a; b >= -a; --b) {
        Integer m;
        if (b == a || b == -a) {
            m = 1; // affine-space strata
        } else {
            Integer exponent = Integer(a + b) * form.h_dual * 2 * c;
            m = modulus.trivial(exponent) ? 1 : 0;
            ensure((m == 1) == (Integer(b) % step == 0), "monodromy triviality disagrees with delta_i | b");
        }
        out[Rational(b) * source.simple_coroot(i)] = m;
    }
    return out;
}

bool mv_vs_character_check(const RootDatum &source, const Integer &n, std::size_t i, long a) {
    WeightMultiplicitySet geometric = support(rank_one_mv_multiplicities(source, n, i, a));
    TwistedDualDatum dd = build_dual_datum(source, n);
    RepDatum line = RepDatum::rank_one(dd, i);
    WeightMultiplicitySet characters;
    for (const auto &[t, m] : freudenthal_multiplicities(line, RatVector{Rational(a)}))
        characters[t[0] * source.simple_coroot(i)] = m;
    return geometric == characters;
}

} // namespace twdual
