#include "twdual/cli.hpp"

#include "twdual/central_ext.hpp"
#include "twdual/error.hpp"
#include "twdual/loop_symbols.hpp"
#include "twdual/rep_check.hpp"
#include "twdual/root_data.hpp"
#include "twdual/twisted_dual.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace twdual::cli {

namespace {

using nlohmann::json;

// Reports an input problem against the flag that carried it.
class FlagError : public std::runtime_error {
  public:
    FlagError(const std::string &flag, const std::string &what) : std::runtime_error("--" + flag + ": " + what) {}
};

template <class F> auto with_flag(const std::string &flag, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const DomainError &e) {
        throw FlagError(flag, e.what());
    }
}

Integer positive_flag(const std::string &flag, const std::string &text) {
    Integer v = with_flag(flag, [&] { return parse_integer(text); });
    if (v <= 0)
        throw FlagError(flag, "must be a positive integer, got " + text);
    return v;
}

long long_flag(const std::string &flag, const std::string &text) {
    Integer v = with_flag(flag, [&] { return parse_integer(text); });
    if (!v.fits_slong_p())
        throw FlagError(flag, "out of range");
    return v.get_si();
}

RootDatum datum_flags(const std::string &type, const std::string &isogeny) {
    CartanType t = with_flag("type", [&] { return CartanType::parse(type); });
    Isogeny iso = with_flag("isogeny", [&] { return Isogeny::parse(isogeny); });
    return with_flag("isogeny", [&] { return build_datum(t, iso); });
}

RatVector vector_flag(const std::string &flag, const std::string &text, std::size_t dim) {
    RatVector v = with_flag(flag, [&] { return parse_rat_vector(text); });
    if (v.size() != dim)
        throw FlagError(flag, "expected " + std::to_string(dim) + " comma-separated coordinates, got " +
                                  std::to_string(v.size()));
    return v;
}

json vector_json(const RatVector &v) {
    json out = json::array();
    for (const auto &q : v)
        out.push_back(to_string(q));
    return out;
}

json invariants_json(const AbelianInvariants &a) {
    json out = json::array();
    for (const auto &f : a.factors)
        out.push_back(f.get_si());
    return out;
}

json multiplicities_json(const WeightMultiplicitySet &m) {
    json out = json::array();
    for (const auto &[w, x] : m)
        out.push_back({{"weight", vector_json(w)}, {"mult", x.get_si()}});
    return out;
}

TorusLoopPoint point_from_json(const json &terms, const CoefficientField &field, std::size_t dim) {
    if (!terms.is_array())
        throw FlagError("points", "each point must be an array of {\"lambda\", \"f\"} terms");
    TorusLoopPoint p;
    for (const auto &term : terms) {
        if (!term.is_object() || !term.contains("lambda") || !term.contains("f"))
            throw FlagError("points", "each term needs \"lambda\" and \"f\"");
        RatVector lambda;
        const json &l = term.at("lambda");
        if (l.is_string()) {
            lambda = vector_flag("points", l.get<std::string>(), dim);
        } else {
            for (const auto &e : l)
                lambda.push_back(with_flag("points", [&] {
                    return e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long>());
                }));
            if (lambda.size() != dim)
                throw FlagError("points", "lambda has wrong dimension");
        }
        LaurentSeries f = with_flag("points", [&] { return LaurentSeries::parse(field, term.at("f").get<std::string>()); });
        p.terms.emplace_back(std::move(lambda), std::move(f));
    }
    return p;
}

const char *kVectorHelp = "Weights and coweights are comma-separated exact rationals in simple-coroot "
                          "coordinates (e.g. 1,0,1/2); simple roots follow Bourbaki numbering.";

} // namespace

std::string emit_json(const OutputEnvelope &envelope) {
    json checks = json::array();
    for (const auto &c : envelope.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}});
    json j = {
        {"schema_version", OutputEnvelope::schema_version},
        {"command", envelope.command},
        {"input_echo", envelope.input_echo},
        {"result", envelope.result},
        {"checks", checks},
    };
    return j.dump() + "\n";
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Twisted dual groups of almost simple groups: root data, central extensions, tame symbols "
                 "and character checks.",
                 "twdual"};
    app.footer(kVectorHelp);
    app.require_subcommand(1);

    std::map<std::string, std::string> flags;
    bool paper_check = false, check = false;
    auto add = [&](CLI::App *sub, const std::string &name, const std::string &desc, bool required,
                   const std::string &def = "") {
        if (!def.empty())
            flags[name] = def;
        auto *opt = sub->add_option("--" + name, flags[name], desc);
        if (required)
            opt->required();
        else if (!def.empty())
            opt->capture_default_str();
    };

    auto *dual = app.add_subcommand("dual", "Root datum and identity of the twisted dual group");
    add(dual, "type", "Cartan type, e.g. C3", true);
    add(dual, "isogeny", "sc | adjoint | so | quotient:[[...]]", false, "sc");
    add(dual, "N", "twisting integer N >= 1", true);

    auto *ext = app.add_subcommand("extensions", "Classification of central extensions of G(F) by Gm");
    add(ext, "type", "Cartan type", true);
    add(ext, "isogeny", "isogeny", false, "sc");

    auto *table = app.add_subcommand("table", "Reproduce the published examples as TSV");
    add(table, "Nmax", "largest N", true);
    table->add_flag("--paper-check", paper_check, "exit 2 if any row disagrees with the published answer");

    auto *symbol = app.add_subcommand("symbol", "Tame symbol (f, g)_st");
    add(symbol, "field", "Q or Fp", false, "Q");
    add(symbol, "f", "Laurent series, e.g. \"t^-2*(3 + 1/2*t)\"", true);
    add(symbol, "g", "Laurent series", true);

    auto *comm = app.add_subcommand("commutator", "Commutator of two torus loop points at level m");
    add(comm, "type", "Cartan type", true);
    add(comm, "isogeny", "isogeny", false, "sc");
    add(comm, "m", "level, a multiple of d", true);
    add(comm, "field", "Q or Fp", false, "Q");
    add(comm, "points", "JSON {\"x1\": [{\"lambda\": \"1,0\", \"f\": \"t\"}], \"x2\": [...]}", true);

    auto *mult = app.add_subcommand("mult", "Weight multiplicities of an irreducible of the twisted dual");
    add(mult, "type", "Cartan type", true);
    add(mult, "isogeny", "isogeny", false, "sc");
    add(mult, "N", "twisting integer", true);
    add(mult, "highest", "dominant dual weight", true);

    auto *mv = app.add_subcommand("mv-rank1", "Rank-one semi-infinite orbit count for highest weight a alpha_i");
    add(mv, "type", "Cartan type", true);
    add(mv, "isogeny", "isogeny", false, "sc");
    add(mv, "N", "twisting integer", true);
    add(mv, "i", "simple index, 1-based", true);
    add(mv, "a", "positive integer", true);
    mv->add_flag("--check", check, "compare against characters of the rank-one dual; exit 2 on mismatch");

    auto *assume = app.add_subcommand("check-assumption", "Is p prime to 2hN/d?");
    add(assume, "type", "Cartan type", true);
    add(assume, "isogeny", "isogeny", false, "sc");
    add(assume, "p", "characteristic, 0 or a prime", true);
    add(assume, "N", "twisting integer", true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    CLI::App *sub = app.get_subcommands().front();
    OutputEnvelope env;
    env.command = sub->get_name();
    for (const auto *opt : sub->get_options()) {
        std::string name = opt->get_single_name();
        if (flags.count(name) && (opt->count() > 0 || !flags[name].empty()))
            env.input_echo[name] = flags[name];
    }
    auto flag = [&](const std::string &name) { return flags.at(name); };

    try {
        if (sub == dual) {
            RootDatum datum = datum_flags(flag("type"), flag("isogeny"));
            Integer n = positive_flag("N", flag("N"));
            env.result = to_json(build_dual_datum(datum, n));
        } else if (sub == ext) {
            RootDatum datum = datum_flags(flag("type"), flag("isogeny"));
            ExtensionClassification c = classify_extensions(datum);
            env.result = {{"d", c.d.get_si()},
                          {"levels", c.levels()},
                          {"aut", invariants_json(c.automorphisms)},
                          {"h_dual", c.h_dual.get_si()}};
            env.checks.push_back({"d divides h_dual", c.h_dual % c.d == 0});
        } else if (sub == table) {
            long nmax = positive_flag("Nmax", flag("Nmax")).get_si();
            auto rows = examples_table(nmax);
            out << "group\tisogeny\tN\tdual\texpected\tverdict\n";
            bool all = true;
            for (const auto &r : rows) {
                out << r.group << '\t' << r.isogeny << '\t' << r.n << '\t' << r.dual << '\t' << r.expected << '\t'
                    << (r.pass ? "pass" : "fail") << '\n';
                all = all && r.pass;
            }
            return paper_check && !all ? 2 : 0;
        } else if (sub == symbol) {
            CoefficientField field = with_flag("field", [&] { return CoefficientField::parse(flag("field")); });
            LaurentSeries f = with_flag("f", [&] { return LaurentSeries::parse(field, flag("f")); });
            LaurentSeries g = with_flag("g", [&] { return LaurentSeries::parse(field, flag("g")); });
            if (f.is_zero())
                throw FlagError("f", "series must be nonzero");
            if (g.is_zero())
                throw FlagError("g", "series must be nonzero");
            env.result = {{"field", field.to_string()}, {"value", to_string(tame_symbol(f, g))}};
        } else if (sub == comm) {
            RootDatum datum = datum_flags(flag("type"), flag("isogeny"));
            Integer m = with_flag("m", [&] { return parse_integer(flag("m")); });
            CoefficientField field = with_flag("field", [&] { return CoefficientField::parse(flag("field")); });
            json points;
            try {
                points = json::parse(flag("points"));
            } catch (const json::exception &e) {
                throw FlagError("points", std::string("malformed JSON: ") + e.what());
            }
            if (!points.is_object() || !points.contains("x1") || !points.contains("x2"))
                throw FlagError("points", "expected an object with keys x1 and x2");
            TorusLoopPoint x1 = point_from_json(points.at("x1"), field, datum.rank());
            TorusLoopPoint x2 = point_from_json(points.at("x2"), field, datum.rank());
            ExtensionSpec spec = with_flag("m", [&] { return ExtensionSpec(datum, m); });
            Rational value = with_flag("points", [&] { return torus_commutator(spec, x1, x2); });
            env.result = {{"field", field.to_string()}, {"level", m.get_str()}, {"value", to_string(value)}};
        } else if (sub == mult) {
            RootDatum datum = datum_flags(flag("type"), flag("isogeny"));
            Integer n = positive_flag("N", flag("N"));
            TwistedDualDatum dd = build_dual_datum(datum, n);
            RatVector highest = vector_flag("highest", flag("highest"), datum.rank());
            RepDatum rd = RepDatum::of_dual(dd);
            WeightMultiplicitySet m = with_flag("highest", [&] { return freudenthal_multiplicities(rd, highest); });
            Integer dim = weyl_dim(rd, highest);
            Integer total = 0;
            for (const auto &[w, x] : m)
                total += x;
            env.result = {{"dual_type", identify(dd).cartan_type.to_string()},
                          {"highest", vector_json(highest)},
                          {"dim", dim.get_si()},
                          {"weights", multiplicities_json(m)}};
            env.checks.push_back({"sum of multiplicities equals Weyl dimension", total == dim});
        } else if (sub == mv) {
            RootDatum datum = datum_flags(flag("type"), flag("isogeny"));
            Integer n = positive_flag("N", flag("N"));
            long i = long_flag("i", flag("i"));
            if (i < 1 || i > static_cast<long>(datum.rank()))
                throw FlagError("i", "simple index must lie in 1.." + std::to_string(datum.rank()));
            long a = positive_flag("a", flag("a")).get_si();
            auto idx = static_cast<std::size_t>(i - 1);
            WeightMultiplicitySet m = with_flag("a", [&] { return rank_one_mv_multiplicities(datum, n, idx, a); });
            env.result = {{"delta", delta(datum, n, idx).get_si()},
                          {"modulus", monodromy_modulus(datum, n).get_si()},
                          {"weights", multiplicities_json(m)}};
            if (check) {
                bool ok = mv_vs_character_check(datum, n, idx, a);
                env.checks.push_back({"mv_vs_character", ok});
            }
        } else if (sub == assume) {
            RootDatum datum = datum_flags(flag("type"), flag("isogeny"));
            Integer p = with_flag("p", [&] { return parse_integer(flag("p")); });
            Integer n = positive_flag("N", flag("N"));
            bool ok = with_flag("p", [&] { return char_assumption_ok(datum, p, n); });
            env.result = {{"ok", ok}, {"modulus", monodromy_modulus(datum, n).get_str()}};
        }
    } catch (const FlagError &e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError &e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }

    out << emit_json(env);
    bool all = std::all_of(env.checks.begin(), env.checks.end(), [](const Check &c) { return c.pass; });
    return all ? 0 : 2;
}

} // namespace twdual::cli
