#pragma once

// Uniform free-function surface over the two scalar rings so the sequence and
// matrix code can be written once as templates.

#include <concepts>
#include <string>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/laurent.hpp"
#include "jacobsthal/rational.hpp"

namespace jacobsthal {

template <class S>
concept Scalar = std::constructible_from<S, long> && std::constructible_from<S, Rational> &&
                 std::equality_comparable<S> && requires(const S& a, const S& b) {
                     { a + b } -> std::convertible_to<S>;
                     { a - b } -> std::convertible_to<S>;
                     { a * b } -> std::convertible_to<S>;
                     { -a } -> std::convertible_to<S>;
                     { a.to_string() } -> std::convertible_to<std::string>;
                 };

inline bool is_unit(const Rational& x) { return !x.is_zero(); }
inline bool is_unit(const Laurent& x) { return x.is_unit(); }

inline Rational unit_inverse(const Rational& x) { return x.reciprocal(); }
inline Laurent unit_inverse(const Laurent& x) { return x.unit_inverse(); }

/// Quotient that must be exact; throws otherwise.
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Laurent exact_div(const Laurent& a, const Laurent& b) { return laurent_exact_div(a, b); }

static_assert(Scalar<Rational>);
static_assert(Scalar<Laurent>);

}  // namespace jacobsthal
