#include "jacobsthal/laurent.hpp"

#include <ostream>

#include "jacobsthal/errors.hpp"

namespace jacobsthal {

Laurent::Laurent(const Rational& constant) {
    add_term(0, constant);
}

Laurent Laurent::monomial(const Rational& coefficient, long exponent) {
    Laurent out;
    out.add_term(exponent, coefficient);
    return out;
}

Rational Laurent::coefficient(long exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Laurent::add_term(long exponent, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

Laurent Laurent::unit_inverse() const {
    if (!is_unit()) {
        throw DomainError("'" + to_string() + "' is not a unit of the Laurent ring");
    }
    const auto& [exponent, coefficient] = *terms_.begin();
    return monomial(coefficient.reciprocal(), -exponent);
}

Rational Laurent::evaluate(const Rational& value) const {
    Rational out;
    for (const auto& [exponent, coefficient] : terms_) {
        if (exponent < 0 && value.is_zero()) {
            throw DomainError("cannot evaluate a negative power of k at k = 0");
        }
        out += coefficient * jacobsthal::pow(value, exponent);
    }
    return out;
}

Laurent Laurent::operator-() const {
    Laurent out;
    for (const auto& [exponent, coefficient] : terms_) out.terms_.emplace(exponent, -coefficient);
    return out;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
    for (const auto& [exponent, coefficient] : rhs.terms_) add_term(exponent, coefficient);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
    for (const auto& [exponent, coefficient] : rhs.terms_) add_term(exponent, -coefficient);
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& rhs) {
    Laurent product;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) product.add_term(e1 + e2, c1 * c2);
    }
    terms_ = std::move(product.terms_);
    return *this;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const long exponent = it->first;
        const Rational& coefficient = it->second;
        const bool negative = coefficient.sign() < 0;
        const Rational magnitude = negative ? -coefficient : coefficient;

        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        if (exponent == 0) {
            out += magnitude.to_string();
            continue;
        }
        if (magnitude != Rational(1)) {
            out += magnitude.is_integer() ? magnitude.to_string()
                                          : "(" + magnitude.to_string() + ")";
        }
        out += 'k';
        if (exponent != 1) out += "^" + std::to_string(exponent);
    }
    return out;
}

Laurent laurent_exact_div(const Laurent& dividend, const Laurent& divisor) {
    if (divisor.is_zero()) throw DomainError("division by the zero Laurent polynomial");
    if (dividend.is_zero()) return {};

    // Shift both operands to ordinary polynomials with non-zero constant
    // term. A Laurent quotient, if it exists, is then an ordinary polynomial.
    const long dividend_shift = dividend.min_exponent();
    const long divisor_shift = divisor.min_exponent();
    Laurent remainder = dividend * Laurent::monomial(Rational(1), -dividend_shift);
    const Laurent base = divisor * Laurent::monomial(Rational(1), -divisor_shift);

    const long base_degree = base.max_exponent();
    const Rational lead = base.coefficient(base_degree);
    Laurent quotient;
    while (!remainder.is_zero() && remainder.max_exponent() >= base_degree) {
        const long degree = remainder.max_exponent();
        const Laurent step =
            Laurent::monomial(remainder.coefficient(degree) / lead, degree - base_degree);
        quotient += step;
        remainder -= step * base;
    }
    if (!remainder.is_zero()) {
        const Laurent reported = remainder * Laurent::monomial(Rational(1), dividend_shift);
        throw InexactDivision("inexact division of '" + dividend.to_string() + "' by '" +
                                  divisor.to_string() + "', remainder '" +
                                  reported.to_string() + "'",
                              reported.to_string());
    }
    return quotient * Laurent::monomial(Rational(1), dividend_shift - divisor_shift);
}

Laurent pow(const Laurent& base, long exponent) {
    if (exponent < 0) return pow(base.unit_inverse(), -exponent);
    Laurent result(1);
    Laurent square = base;
    for (auto e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
        if (e & 1U) result *= square;
        if (e > 1) square *= square;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Laurent& value) {
    return os << value.to_string();
}

}  // namespace jacobsthal
