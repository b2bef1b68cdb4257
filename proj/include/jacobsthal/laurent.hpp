#pragma once

/**
 * Laurent polynomials in a single symbol k with rational coefficients.
 *
 * Storage is sparse: a map from exponent to a non-zero coefficient. The empty
 * map is the unique zero, so two values are equal iff their maps are equal.
 */

#include <iosfwd>
#include <map>
#include <string>

#include "jacobsthal/rational.hpp"

namespace jacobsthal {

class Laurent {
public:
    using Terms = std::map<long, Rational>;

    Laurent() = default;
    Laurent(long constant) : Laurent(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    Laurent(const Rational& constant);                       // NOLINT(google-explicit-constructor)

    /// c * k^exponent.
    static Laurent monomial(const Rational& coefficient, long exponent);
    /// The indeterminate k itself.
    static Laurent k() { return monomial(Rational(1), 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of k^exponent (zero when absent).
    Rational coefficient(long exponent) const;
    /// Lowest and highest exponent present. Undefined on zero.
    long min_exponent() const { return terms_.begin()->first; }
    long max_exponent() const { return terms_.rbegin()->first; }

    /// A single term c * k^e is a unit of the ring; nothing else is.
    bool is_unit() const { return terms_.size() == 1; }
    /// Throws DomainError for non-units.
    Laurent unit_inverse() const;

    /// Substitutes k = value. Throws DomainError for value 0 with negative exponents.
    Rational evaluate(const Rational& value) const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& rhs);
    Laurent& operator-=(const Laurent& rhs);
    Laurent& operator*=(const Laurent& rhs);

    friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
    friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
    friend Laurent operator*(Laurent lhs, const Laurent& rhs) { return lhs *= rhs; }

    friend bool operator==(const Laurent& lhs, const Laurent& rhs) = default;

    /// Terms in strictly decreasing exponent order, e.g. "k^2 - k + 1 - 2k^-1".
    /// Non-integer coefficients are parenthesised: "(1/2)k^2".
    std::string to_string() const;

private:
    void add_term(long exponent, const Rational& coefficient);

    Terms terms_;
};

/// Returns r with r * divisor == dividend. Throws DomainError when the divisor
/// is zero and InexactDivision (carrying the remainder) when it does not divide.
Laurent laurent_exact_div(const Laurent& dividend, const Laurent& divisor);

/// Integer powers; negative exponents require a unit.
Laurent pow(const Laurent& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Laurent& value);

}  // namespace jacobsthal
