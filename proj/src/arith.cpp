#include "twdual/arith.hpp"

#include "twdual/error.hpp"

#include <algorithm>
#include <cctype>

namespace twdual {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

} // namespace

std::string to_string(const Rational &q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer &z) { return z.get_str(); }

std::string to_string(const RatVector &v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += to_string(v[i]);
    }
    return out + "]";
}

Integer parse_integer(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw DomainError("malformed integer '" + std::string(text) + "'");
    Integer z(std::string(s), 10);
    return negative ? Integer(-z) : z;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!all_digits(den_text))
        throw DomainError("malformed rational '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0)
        throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RatVector parse_rat_vector(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw DomainError("unbalanced brackets in '" + std::string(text) + "'");
        s = trim(s.substr(1, s.size() - 2));
    }
    RatVector out;
    if (s.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        out.push_back(parse_rational(s.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

bool is_integer(const Rational &q) { return q.get_den() == 1; }

Integer to_integer(const Rational &q) {
    ensure(is_integer(q), "expected an integer, got " + to_string(q));
    return q.get_num();
}

Integer gcd(const Integer &a, const Integer &b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer &a, const Integer &b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer denominator_lcm(const RatVector &v) {
    Integer l = 1;
    for (const auto &q : v)
        l = lcm(l, q.get_den());
    return l;
}

RatVector zero_vector(std::size_t n) { return RatVector(n, Rational(0)); }

RatVector unit_vector(std::size_t n, std::size_t i) {
    RatVector v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const RatVector &v) {
    return std::all_of(v.begin(), v.end(), [](const Rational &q) { return q == 0; });
}

bool is_integral(const RatVector &v) {
    return std::all_of(v.begin(), v.end(), [](const Rational &q) { return is_integer(q); });
}

RatVector operator+(const RatVector &a, const RatVector &b) {
    ensure(a.size() == b.size(), "vector size mismatch");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

RatVector operator-(const RatVector &a, const RatVector &b) {
    ensure(a.size() == b.size(), "vector size mismatch");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

RatVector operator-(const RatVector &a) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = -a[i];
    return out;
}

RatVector operator*(const Rational &s, const RatVector &v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = s * v[i];
    return out;
}

} // namespace twdual
