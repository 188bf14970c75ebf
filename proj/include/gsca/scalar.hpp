#pragma once

#include "gsca/laurent.hpp"

#include <concepts>
#include <stdexcept>
#include <string>
#include <variant>

namespace gsca {

// A coefficient ring usable by the algebra core. Both GaussianRational
// (constant domain) and LaurentPoly (laurent domain) model this.
template <class R>
concept ScalarRing = requires(const R& a, const R& b) {
    { R::zero() } -> std::convertible_to<R>;
    { R::one() } -> std::convertible_to<R>;
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
};

inline std::string render_scalar(const GaussianRational& g) { return render_gaussian(g); }
inline std::string render_scalar(const LaurentPoly& p) { return render_laurent(p); }

template <class R> R parse_scalar(const std::string& s);
template <> inline GaussianRational parse_scalar<GaussianRational>(const std::string& s) { return parse_gaussian(s); }
template <> inline LaurentPoly parse_scalar<LaurentPoly>(const std::string& s) { return parse_laurent(s); }

// Tagged scalar for the generic arithmetic entry point and for IO code that
// handles both domains at once.
using Scalar = std::variant<GaussianRational, LaurentPoly>;

enum class ScalarOp { Add, Sub, Mul, Div };

// Exact arithmetic across the tower. Mixing a constant with a Laurent value
// promotes the constant. Division by zero and division by a non-monomial
// Laurent polynomial throw std::domain_error.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

std::string render_scalar_variant(const Scalar& s);

} // namespace gsca
