#pragma once

#include "gsca/gaussian.hpp"

#include <map>
#include <optional>
#include <string>

namespace gsca {

// Laurent polynomial in u, where u^2 = c is the contraction parameter.
// Sparse map exponent -> coefficient; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(GaussianRational constant) {
        if (!constant.is_zero()) coeffs_[0] = std::move(constant);
    }
    LaurentPoly(long long n) : LaurentPoly(GaussianRational(n)) {}

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(GaussianRational::one()); }
    static LaurentPoly monomial(GaussianRational c, int exp) {
        LaurentPoly p;
        if (!c.is_zero()) p.coeffs_[exp] = std::move(c);
        return p;
    }

    const std::map<int, GaussianRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monomial() const { return coeffs_.size() == 1; }

    GaussianRational coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? GaussianRational::zero() : it->second;
    }
    // Largest exponent with nonzero coefficient; nullopt for the zero polynomial.
    std::optional<int> max_degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.rbegin()->first;
    }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    // Division is defined only by nonzero monomials.
    LaurentPoly operator/(const LaurentPoly& o) const;

    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;

private:
    std::map<int, GaussianRational> coeffs_;
};

// lim_{u -> infinity} after discarding negative powers: the u^0 coefficient.
// nullopt when a positive power survives (the limit diverges).
std::optional<GaussianRational> laurent_limit(const LaurentPoly& p);

// Canonical form, descending exponents: "(1/2+1*i)*u^2 + (-3)*u^-1", "0".
// The u^0 term is rendered as a bare parenthesized coefficient.
std::string render_laurent(const LaurentPoly& p);
LaurentPoly parse_laurent(const std::string& s);

} // namespace gsca
