#include "twdual/loop_symbols.hpp"

#include "twdual/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>

namespace twdual {

// ---------------------------------------------------------------------------
// CoefficientField

CoefficientField CoefficientField::prime(unsigned long p) {
    require(p >= 2 && mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) > 0,
            "field characteristic " + std::to_string(p) + " is not prime");
    return CoefficientField(p);
}

CoefficientField CoefficientField::parse(std::string_view text) {
    if (text == "Q" || text == "QQ")
        return rationals();
    std::string_view digits;
    if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f'))
        digits = text.substr(1);
    else if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')')
        digits = text.substr(3, text.size() - 4);
    require(!digits.empty() && digits.size() < 10 &&
                std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }),
            "unknown coefficient field '" + std::string(text) + "' (expected Q or Fp)");
    return prime(std::stoul(std::string(digits)));
}

Rational CoefficientField::normalize(const Rational &x) const {
    if (p_ == 0) {
        Rational q = x;
        q.canonicalize();
        return q;
    }
    Integer p(p_);
    Integer den_inv;
    require(mpz_invert(den_inv.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()) != 0,
            "denominator of " + twdual::to_string(x) + " vanishes in F" + std::to_string(p_));
    Integer r = x.get_num() * den_inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    return Rational(r);
}

Rational CoefficientField::inverse(const Rational &a) const {
    Rational x = normalize(a);
    require(x != 0, "inverse of zero");
    if (p_ == 0)
        return Rational(1) / x;
    return normalize(Rational(1) / x);
}

Rational CoefficientField::power(const Rational &a, const Integer &e) const {
    Rational base = normalize(a);
    Integer exp = e;
    if (exp < 0) {
        base = inverse(base);
        exp = -exp;
    }
    Rational result = 1;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t()))
            result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

std::string CoefficientField::to_string() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries::LaurentSeries(CoefficientField field, long valuation, std::vector<Rational> coefficients, long precision)
    : field_(field), valuation_(valuation), precision_(precision) {
    require(precision >= 1, "series precision must be positive");
    coefficients.resize(static_cast<std::size_t>(precision), Rational(0));
    for (auto &c : coefficients)
        c = field_.normalize(c);
    auto first = std::find_if(coefficients.begin(), coefficients.end(), [](const Rational &c) { return c != 0; });
    require(first != coefficients.end(),
            "series vanishes to its known precision; valuation undetermined (supply more terms)");
    long shift = first - coefficients.begin();
    valuation_ += shift;
    precision_ -= shift;
    coefficients_.assign(first, coefficients.end());
}

LaurentSeries LaurentSeries::zero(CoefficientField field) { return LaurentSeries(field); }

LaurentSeries LaurentSeries::monomial(CoefficientField field, const Rational &c, long exponent, long precision) {
    return LaurentSeries(field, exponent, {c}, precision);
}

long LaurentSeries::valuation() const {
    require(!zero_, "valuation of the zero series");
    return valuation_;
}

const Rational &LaurentSeries::leading() const {
    require(!zero_, "leading coefficient of the zero series");
    return coefficients_.front();
}

Rational LaurentSeries::coefficient(long k) const {
    if (zero_)
        return 0;
    require(k < absolute_precision(), "coefficient of t^" + std::to_string(k) + " is beyond the known precision");
    if (k < valuation_)
        return 0;
    return coefficients_[static_cast<std::size_t>(k - valuation_)];
}

LaurentSeries operator*(const LaurentSeries &f, const LaurentSeries &g) {
    require(f.field_ == g.field_, "series over different coefficient fields");
    if (f.zero_ || g.zero_)
        return LaurentSeries::zero(f.field_);
    const long prec = std::min(f.precision_, g.precision_);
    std::vector<Rational> c(static_cast<std::size_t>(prec), Rational(0));
    for (long i = 0; i < prec; ++i)
        for (long j = 0; i + j < prec; ++j)
            c[i + j] += f.coefficients_[i] * g.coefficients_[j];
    return LaurentSeries(f.field_, f.valuation_ + g.valuation_, std::move(c), prec);
}

LaurentSeries operator+(const LaurentSeries &f, const LaurentSeries &g) {
    require(f.field_ == g.field_, "series over different coefficient fields");
    if (f.zero_)
        return g;
    if (g.zero_)
        return f;
    const long low = std::min(f.valuation_, g.valuation_);
    const long high = std::min(f.absolute_precision(), g.absolute_precision());
    std::vector<Rational> c;
    for (long k = low; k < high; ++k)
        c.push_back(f.field_.add(f.coefficient(k), g.coefficient(k)));
    require(!c.empty(), "sum has no known coefficients");
    return LaurentSeries(f.field_, low, std::move(c), high - low);
}

LaurentSeries LaurentSeries::operator-() const {
    if (zero_)
        return *this;
    LaurentSeries out = *this;
    for (auto &c : out.coefficients_)
        c = field_.neg(c);
    return out;
}

LaurentSeries operator-(const LaurentSeries &f, const LaurentSeries &g) { return f + (-g); }

LaurentSeries LaurentSeries::invert() const {
    require(!zero_, "inverse of the zero series");
    const std::size_t n = coefficients_.size();
    const Rational c0_inv = field_.inverse(coefficients_[0]);
    std::vector<Rational> b(n, Rational(0));
    b[0] = c0_inv;
    for (std::size_t k = 1; k < n; ++k) {
        Rational s = 0;
        for (std::size_t j = 1; j <= k; ++j)
            s += coefficients_[j] * b[k - j];
        b[k] = field_.mul(field_.neg(s), c0_inv);
    }
    return LaurentSeries(field_, -valuation_, std::move(b), precision_);
}

LaurentSeries LaurentSeries::pow(long e) const {
    require(!zero_ || e > 0, "non-positive power of the zero series");
    if (zero_)
        return *this;
    LaurentSeries base = e < 0 ? invert() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    LaurentSeries result = one(field_, precision_);
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

std::string LaurentSeries::to_string() const {
    if (zero_)
        return "0";
    std::string body;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        const Rational &c = coefficients_[i];
        if (c == 0)
            continue;
        long k = valuation_ + static_cast<long>(i);
        std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        std::string coef = twdual::to_string(c);
        std::string term = mono.empty() ? coef : (c == 1 ? mono : coef + "*" + mono);
        if (!body.empty())
            body += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
        else
            body = term;
    }
    return body + " + O(t^" + std::to_string(absolute_precision()) + ")";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using Poly = std::map<long, Rational>;

Poly poly_mul(const Poly &a, const Poly &b) {
    Poly out;
    for (const auto &[i, x] : a)
        for (const auto &[j, y] : b)
            out[i + j] += x * y;
    return out;
}

class SeriesParser {
  public:
    explicit SeriesParser(std::string_view text) : text_(text) {}

    std::pair<Poly, std::optional<long>> parse() {
        Poly p = expr(true);
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return {p, big_o_};
    }

  private:
    [[noreturn]] void fail(const std::string &why) const {
        throw DomainError("cannot parse series '" + std::string(text_) + "': " + why);
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long signed_int() {
        skip();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string_view tok = text_.substr(start, pos_ - start);
        Integer z = parse_integer(tok);
        if (!z.fits_slong_p())
            fail("exponent out of range");
        return z.get_si();
    }
    Poly expr(bool top) {
        Poly acc;
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        while (true) {
            skip();
            if (top && pos_ + 1 < text_.size() && text_[pos_] == 'O' && text_[pos_ + 1] == '(') {
                if (negate)
                    fail("negated O-term");
                pos_ += 2;
                if (!accept('t'))
                    fail("expected t inside O(...)");
                long k = accept('^') ? signed_int() : 1;
                if (!accept(')'))
                    fail("expected ')'");
                big_o_ = big_o_ ? std::min(*big_o_, k) : k;
            } else {
                Poly t = term();
                for (const auto &[k, c] : t)
                    acc[k] += negate ? Rational(-c) : c;
            }
            if (accept('+'))
                negate = false;
            else if (accept('-'))
                negate = true;
            else
                break;
        }
        return acc;
    }
    Poly term() {
        Poly acc = factor();
        while (accept('*'))
            acc = poly_mul(acc, factor());
        return acc;
    }
    Poly factor() {
        skip();
        if (accept('(')) {
            Poly inner = expr(false);
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (accept('t')) {
            long k = accept('^') ? signed_int() : 1;
            return Poly{{k, Rational(1)}};
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        if (start == pos_)
            fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
        return Poly{{0, parse_rational(text_.substr(start, pos_ - start))}};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::optional<long> big_o_;
};

} // namespace

LaurentSeries LaurentSeries::parse(CoefficientField field, std::string_view text, long default_precision) {
    auto [poly, big_o] = SeriesParser(text).parse();
    Poly nonzero;
    for (const auto &[k, c] : poly) {
        Rational x = field.normalize(c);
        if (x != 0 && (!big_o || k < *big_o))
            nonzero[k] = x;
    }
    if (nonzero.empty()) {
        require(!big_o, "series '" + std::string(text) + "' vanishes to its stated precision");
        return zero(field);
    }
    const long v = nonzero.begin()->first;
    const long span = nonzero.rbegin()->first - v + 1;
    const long prec = big_o ? *big_o - v : std::max(default_precision, span);
    std::vector<Rational> coeffs(static_cast<std::size_t>(prec), Rational(0));
    for (const auto &[k, c] : nonzero)
        coeffs[static_cast<std::size_t>(k - v)] = c;
    return LaurentSeries(field, v, std::move(coeffs), prec);
}

// ---------------------------------------------------------------------------
// Symbols

Rational tame_symbol(const LaurentSeries &f, const LaurentSeries &g) {
    require(!f.is_zero() && !g.is_zero(), "tame symbol of a zero series");
    require(f.field() == g.field(), "tame symbol of series over different fields");
    const CoefficientField &field = f.field();
    const long vf = f.valuation(), vg = g.valuation();

    LaurentSeries unit = g.pow(vf) * f.pow(-vg);
    ensure(unit.valuation() == 0, "g^v(f) f^-v(g) has nonzero valuation");
    Rational value = unit.coefficient(0);
    if ((vf * vg) % 2 != 0)
        value = field.neg(value);

    // Only valuations and leading coefficients can matter.
    Rational predicted = field.mul(field.power(g.leading(), vf), field.power(f.leading(), -vg));
    if ((vf * vg) % 2 != 0)
        predicted = field.neg(predicted);
    ensure(value == predicted, "tame symbol depends on more than leading terms");
    return value;
}

Rational torus_commutator(const ExtensionSpec &spec, const TorusLoopPoint &x1, const TorusLoopPoint &x2) {
    std::optional<CoefficientField> field;
    auto check_field = [&](const LaurentSeries &s) {
        require(!s.is_zero(), "torus loop point has a zero series");
        if (!field)
            field = s.field();
        require(*field == s.field(), "torus loop points over different fields");
    };
    for (const auto &[l, f] : x1.terms)
        check_field(f);
    for (const auto &[l, g] : x2.terms)
        check_field(g);
    if (!field)
        return 1;
    Rational result = 1;
    for (const auto &[l1, f] : x1.terms)
        for (const auto &[l2, g] : x2.terms) {
            Integer e = commutator_exponent(spec, l1, l2);
            result = field->mul(result, field->power(tame_symbol(f, g), e));
        }
    return result;
}

} // namespace twdual
