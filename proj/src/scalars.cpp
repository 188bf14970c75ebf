#include "gsca/scalar.hpp"

#include <cstdlib>
#include <sstream>

namespace gsca {

std::string render_rational(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    char take() { return s[pos++]; }
    void expect(char c) {
        if (done() || s[pos] != c)
            throw std::invalid_argument("scalar parse error at position " + std::to_string(pos) + " in '" + s + "'");
        ++pos;
    }
    void skip_ws() { while (!done() && s[pos] == ' ') ++pos; }
};

BigInt parse_digits(Cursor& c) {
    if (!isdigit(static_cast<unsigned char>(c.peek())))
        throw std::invalid_argument("expected digits in '" + c.s + "' at " + std::to_string(c.pos));
    BigInt v = 0;
    while (!c.done() && isdigit(static_cast<unsigned char>(c.peek())))
        v = v * 10 + (c.take() - '0');
    return v;
}

Rational parse_rational_at(Cursor& c) {
    bool neg = false;
    if (c.peek() == '-') { neg = true; c.take(); }
    else if (c.peek() == '+') { c.take(); }
    BigInt num = parse_digits(c);
    BigInt den = 1;
    if (c.peek() == '/') {
        c.take();
        den = parse_digits(c);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + c.s + "'");
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

GaussianRational parse_gaussian_at(Cursor& c) {
    // <rat> | <rat>(+|-)<rat>*i | <rat>*i
    Rational first = parse_rational_at(c);
    if (c.peek() == '*') {
        c.take(); c.expect('i');
        return GaussianRational(Rational(0), first);
    }
    if (c.peek() == '+' || c.peek() == '-') {
        size_t save = c.pos;
        Rational second = parse_rational_at(c);
        if (c.peek() == '*') {
            c.take(); c.expect('i');
            return GaussianRational(first, second);
        }
        // not an imaginary tail; backtrack (happens only in laurent sums)
        c.pos = save;
    }
    return GaussianRational(first);
}

} // namespace

Rational parse_rational(const std::string& s) {
    Cursor c{s};
    Rational r = parse_rational_at(c);
    if (!c.done()) throw std::invalid_argument("trailing characters in rational '" + s + "'");
    return r;
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    GaussianRational num = *this * o.conj();
    return {num.re() / n, num.im() / n};
}

std::string render_gaussian(const GaussianRational& g) {
    if (g.is_zero()) return "0";
    std::string out;
    if (g.re() != 0) out += render_rational(g.re());
    if (g.im() != 0) {
        if (!out.empty() && g.im() > 0) out += "+";
        out += render_rational(g.im());
        out += "*i";
    }
    return out;
}

GaussianRational parse_gaussian(const std::string& s) {
    Cursor c{s};
    GaussianRational g = parse_gaussian_at(c);
    if (!c.done()) throw std::invalid_argument("trailing characters in scalar '" + s + "'");
    return g;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, v] : coeffs_) out.coeffs_[e] = -v;
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, v] : o.coeffs_) {
        auto it = out.coeffs_.find(e);
        if (it == out.coeffs_.end()) {
            out.coeffs_[e] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) out.coeffs_.erase(it);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, v1] : coeffs_)
        for (const auto& [e2, v2] : o.coeffs_) {
            GaussianRational p = v1 * v2;
            if (p.is_zero()) continue;
            auto it = out.coeffs_.find(e1 + e2);
            if (it == out.coeffs_.end()) {
                out.coeffs_[e1 + e2] = p;
            } else {
                it->second += p;
                if (it->second.is_zero()) out.coeffs_.erase(it);
            }
        }
    return out;
}

LaurentPoly LaurentPoly::operator/(const LaurentPoly& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (!o.is_monomial()) throw std::domain_error("laurent division only by monomials");
    auto [de, dv] = *o.coeffs().begin();
    LaurentPoly out;
    for (const auto& [e, v] : coeffs_) out.coeffs_[e - de] = v / dv;
    return out;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    return std::lexicographical_compare(
        coeffs_.begin(), coeffs_.end(), o.coeffs_.begin(), o.coeffs_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
}

std::optional<GaussianRational> laurent_limit(const LaurentPoly& p) {
    auto deg = p.max_degree();
    if (!deg) return GaussianRational::zero();
    if (*deg > 0) return std::nullopt;
    return p.coeff(0);
}

std::string render_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + render_gaussian(it->second) + ")";
        if (it->first != 0) out += "*u^" + std::to_string(it->first);
    }
    return out;
}

LaurentPoly parse_laurent(const std::string& s) {
    if (s == "0") return LaurentPoly::zero();
    LaurentPoly out;
    Cursor c{s};
    while (true) {
        c.skip_ws();
        c.expect('(');
        GaussianRational coef = parse_gaussian_at(c);
        c.expect(')');
        int exp = 0;
        if (c.peek() == '*') {
            c.take(); c.expect('u'); c.expect('^');
            bool neg = false;
            if (c.peek() == '-') { neg = true; c.take(); }
            BigInt e = parse_digits(c);
            exp = static_cast<int>(e);
            if (neg) exp = -exp;
        }
        out += LaurentPoly::monomial(coef, exp);
        c.skip_ws();
        if (c.done()) break;
        c.expect('+');
    }
    return out;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    auto as_laurent = [](const Scalar& s) {
        if (std::holds_alternative<LaurentPoly>(s)) return std::get<LaurentPoly>(s);
        return LaurentPoly(std::get<GaussianRational>(s));
    };
    if (std::holds_alternative<GaussianRational>(a) && std::holds_alternative<GaussianRational>(b)) {
        const auto& x = std::get<GaussianRational>(a);
        const auto& y = std::get<GaussianRational>(b);
        switch (op) {
            case ScalarOp::Add: return x + y;
            case ScalarOp::Sub: return x - y;
            case ScalarOp::Mul: return x * y;
            case ScalarOp::Div: return x / y;
        }
    }
    LaurentPoly x = as_laurent(a), y = as_laurent(b);
    switch (op) {
        case ScalarOp::Add: return x + y;
        case ScalarOp::Sub: return x - y;
        case ScalarOp::Mul: return x * y;
        case ScalarOp::Div: return x / y;
    }
    throw std::logic_error("unreachable");
}

std::string render_scalar_variant(const Scalar& s) {
    if (std::holds_alternative<GaussianRational>(s)) return render_gaussian(std::get<GaussianRational>(s));
    return render_laurent(std::get<LaurentPoly>(s));
}

} // namespace gsca
