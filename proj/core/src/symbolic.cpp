#include "sl2rep/symbolic.hpp"

#include "sl2rep/fq.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sl2rep {

namespace {

std::string coef_prefix(const Rational& magnitude) {
    // "" for 1, "2*" for integers, "(1/2)*" for fractions.
    if (magnitude == 1) return "";
    if (magnitude.get_den() == 1) return magnitude.get_str() + "*";
    return "(" + magnitude.get_str() + ")*";
}

std::string signed_term(const Rational& a, const Rational& b, const std::string& atom) {
    std::string out;
    if (a != 0) {
        out = a.get_str();
        out += b < 0 ? "-" : "+";
    } else if (b < 0) {
        out = "-";
    }
    return out + coef_prefix(abs(b)) + atom;
}

std::int64_t parse_int(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("expected an integer");
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("expected an integer, got '" + text + "'");
    return v;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(static_cast<long>(parse_int(text)));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(static_cast<long>(parse_int(text.substr(0, slash))), static_cast<long>(den));
    r.canonicalize();
    return r;
}

struct Split {
    Rational a;
    Rational b;
};

// Splits the text preceding an atom ("nu(" or "sqrt(") into constant and coefficient.
Split split_prefix(std::string prefix) {
    Rational coef = 1;
    if (!prefix.empty() && prefix.back() == '*') {
        prefix.pop_back();
        std::size_t start = prefix.size();
        if (!prefix.empty() && prefix.back() == ')') {
            start = prefix.rfind('(');
            if (start == std::string::npos) throw std::invalid_argument("unbalanced coefficient");
            coef = parse_rational(prefix.substr(start + 1, prefix.size() - start - 2));
        } else {
            while (start > 0 && std::isdigit(static_cast<unsigned char>(prefix[start - 1]))) --start;
            coef = parse_rational(prefix.substr(start));
        }
        prefix.erase(start);
    }
    Rational a = 0;
    if (!prefix.empty()) {
        const char sign = prefix.back();
        if (sign != '+' && sign != '-') throw std::invalid_argument("expected a sign before the term");
        if (sign == '-') coef = -coef;
        prefix.pop_back();
        if (!prefix.empty()) a = parse_rational(prefix);
        else if (sign == '+') throw std::invalid_argument("dangling '+'");
    }
    return {a, coef};
}

// Comma-separated integers strictly between `open` and `close`.
std::vector<std::int64_t> parse_args(const std::string& text, std::size_t open, std::size_t close) {
    std::vector<std::int64_t> out;
    std::size_t start = open + 1;
    for (std::size_t i = start; i <= close; ++i) {
        if (i == close || text[i] == ',') {
            out.push_back(parse_int(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

Symbolic Symbolic::rational(const Rational& value) {
    Symbolic out;
    out.a = value;
    out.a.canonicalize();
    return out;
}

Symbolic Symbolic::nu_form(Rational a, Rational b, std::uint32_t r, std::int64_t s) {
    a.canonicalize();
    b.canonicalize();
    if (r == 0) throw std::invalid_argument("nu(r,s) needs r >= 1");
    std::int64_t t = s % static_cast<std::int64_t>(r);
    if (t < 0) t += r;
    if (2 * t > static_cast<std::int64_t>(r)) t = r - t;
    if (b == 0) return rational(a);
    // nu(r,t) is rational exactly when the reduced denominator is 1, 2, 3, 4 or 6.
    const std::int64_t d = r / std::gcd<std::int64_t, std::int64_t>(r, t);
    switch (d) {
        case 1: return rational(a + 2 * b);
        case 2: return rational(a - 2 * b);
        case 3: return rational(a - b);
        case 4: return rational(a);
        case 6: return rational(a + b);
        default: break;
    }
    Symbolic out;
    out.kind = Kind::Nu;
    out.a = a;
    out.b = b;
    out.r = r;
    out.s = t;
    return out;
}

Symbolic Symbolic::surd_form(Rational a, Rational b, std::int64_t radicand) {
    a.canonicalize();
    b.canonicalize();
    const std::int64_t q = std::llabs(radicand);
    if (!is_odd_prime(static_cast<std::uint64_t>(q))) {
        throw std::invalid_argument("sqrt radicand must be +-q for an odd prime q");
    }
    const std::int64_t eps = (q % 4 == 1) ? 1 : -1;
    if (radicand != eps * q) throw std::invalid_argument("sqrt radicand must equal eps*q");
    if (b == 0) return rational(a);
    Symbolic out;
    out.kind = Kind::Surd;
    out.a = a;
    out.b = b;
    out.radicand = radicand;
    return out;
}

CycNum Symbolic::value() const {
    switch (kind) {
        case Kind::Rational: return CycNum(a);
        case Kind::Nu: return CycNum(a) + nu(r, s) * b;
        case Kind::Surd:
            return CycNum(a) + sqrt_eps_q(static_cast<std::uint32_t>(std::llabs(radicand))) * b;
    }
    throw std::logic_error("unknown symbolic kind");
}

Symbolic Symbolic::scaled(const Rational& factor) const {
    switch (kind) {
        case Kind::Rational: return rational(a * factor);
        case Kind::Nu: return nu_form(a * factor, b * factor, r, s);
        case Kind::Surd: return surd_form(a * factor, b * factor, radicand);
    }
    throw std::logic_error("unknown symbolic kind");
}

std::string Symbolic::to_string() const {
    switch (kind) {
        case Kind::Rational: return a.get_str();
        case Kind::Nu:
            return signed_term(a, b, "nu(" + std::to_string(r) + "," + std::to_string(s) + ")");
        case Kind::Surd: {
            mpz_class den;
            mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
            const Rational A = a * den;
            const Rational B = b * den;
            const std::string body =
                signed_term(A, B, "sqrt(" + std::to_string(radicand) + ")");
            if (den == 1) return body;
            return "(" + body + ")/" + den.get_str();
        }
    }
    return "?";
}

bool operator==(const Symbolic& x, const Symbolic& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.r == y.r && x.s == y.s &&
           x.radicand == y.radicand;
}

Symbolic operator+(const Symbolic& x, const Symbolic& y) {
    using K = Symbolic::Kind;
    if (y.kind == K::Rational) {
        Symbolic out = x;
        out.a += y.a;
        return out;
    }
    if (x.kind == K::Rational) return y + x;
    if (x.kind == K::Nu && y.kind == K::Nu && x.r == y.r && x.s == y.s) {
        return Symbolic::nu_form(x.a + y.a, x.b + y.b, x.r, x.s);
    }
    if (x.kind == K::Surd && y.kind == K::Surd && x.radicand == y.radicand) {
        return Symbolic::surd_form(x.a + y.a, x.b + y.b, x.radicand);
    }
    throw std::invalid_argument("sum of " + x.to_string() + " and " + y.to_string() +
                                " has no single symbolic form");
}

Symbolic parse_symbolic(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty symbolic value");
    if (const auto p = text.find("nu("); p != std::string::npos) {
        if (text.back() != ')') throw std::invalid_argument("nu term must end the value");
        const auto args = parse_args(text, p + 2, text.size() - 1);
        if (args.size() != 2 || args[0] <= 0) throw std::invalid_argument("nu needs (r,s)");
        const Split sp = split_prefix(text.substr(0, p));
        return Symbolic::nu_form(sp.a, sp.b, static_cast<std::uint32_t>(args[0]), args[1]);
    }
    if (const auto p = text.find("sqrt("); p != std::string::npos) {
        std::string body = text;
        Rational den = 1;
        if (body.front() == '(') {
            const auto close = body.rfind(")/");
            if (close == std::string::npos) throw std::invalid_argument("expected ')/den'");
            den = parse_rational(body.substr(close + 2));
            body = body.substr(1, close - 1);
        }
        const auto q = body.find("sqrt(");
        const auto end = body.find(')', q);
        if (end == std::string::npos || end + 1 != body.size()) {
            throw std::invalid_argument("sqrt term must end the value");
        }
        const auto args = parse_args(body, q + 4, end);
        if (args.size() != 1) throw std::invalid_argument("sqrt needs one argument");
        const Split sp = split_prefix(body.substr(0, q));
        return Symbolic::surd_form(sp.a / den, sp.b / den, args[0]);
    }
    return Symbolic::rational(parse_rational(text));
}

}  // namespace sl2rep
