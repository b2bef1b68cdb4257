#include "jacobsthal/kvalue.hpp"

#include "jacobsthal/errors.hpp"

namespace jacobsthal {

KValue KValue::fixed(const Rational& value) {
    if (value.sign() <= 0) throw DomainError("k must be positive, got " + value.to_string());
    return KValue(value);
}

KValue KValue::parse(std::string_view text) {
    if (text == "sym") return symbolic();
    return fixed(Rational::parse(text));
}

std::string render(const AnyScalar& value) {
    return std::visit([](const auto& v) { return v.to_string(); }, value);
}

std::array<std::array<std::string, 3>, 3> render(const AnyMatrix& value) {
    return std::visit([](const auto& m) { return m.render(); }, value);
}

}  // namespace jacobsthal
