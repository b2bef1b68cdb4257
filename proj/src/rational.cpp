#include "jacobsthal/rational.hpp"

#include <ostream>

#include "jacobsthal/errors.hpp"

namespace jacobsthal {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string digits(text);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    const std::size_t first = (!digits.empty() && digits.front() == '-') ? 1 : 0;
    if (digits.size() == first) {
        throw DomainError("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = first; i < digits.size(); ++i) {
        if (digits[i] < '0' || digits[i] > '9') {
            throw DomainError("malformed rational '" + std::string(whole) + "'");
        }
    }
    return Integer(digits, 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const std::string_view den = text.substr(slash + 1);
    if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash), text), parse_integer(den, text));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    return Rational(value_.get_den(), value_.get_num());
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational rational_canonicalize(const Integer& num, const Integer& den) {
    return Rational(num, den);
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return pow(base.reciprocal(), -exponent);
    Integer num;
    Integer den;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

}  // namespace jacobsthal
