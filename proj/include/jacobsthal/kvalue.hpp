#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "jacobsthal/laurent.hpp"
#include "jacobsthal/matrix3.hpp"
#include "jacobsthal/rational.hpp"

namespace jacobsthal {

/// The parameter k: either a fixed positive rational or the symbol itself.
class KValue {
public:
    /// Throws DomainError unless value > 0.
    static KValue fixed(const Rational& value);
    static KValue symbolic() { return KValue(); }
    /// "p", "p/q" (must be positive) or "sym".
    static KValue parse(std::string_view text);

    bool is_symbolic() const { return !value_.has_value(); }
    /// Undefined for symbolic k.
    const Rational& value() const { return *value_; }

    /// "sym" or the rendered rational.
    std::string to_string() const { return is_symbolic() ? "sym" : value_->to_string(); }

    friend bool operator==(const KValue&, const KValue&) = default;

private:
    KValue() = default;
    explicit KValue(Rational value) : value_(std::move(value)) {}

    std::optional<Rational> value_;
};

/// Calls fn with k as a scalar of the matching ring: the rational itself, or
/// the Laurent indeterminate for symbolic k.
template <class Fn>
decltype(auto) with_k(const KValue& k, Fn&& fn) {
    if (k.is_symbolic()) return std::forward<Fn>(fn)(Laurent::k());
    return std::forward<Fn>(fn)(k.value());
}

/// A scalar from either ring, for callers that pick k at run time.
using AnyScalar = std::variant<Rational, Laurent>;
using AnyMatrix = std::variant<Matrix3<Rational>, Matrix3<Laurent>>;

std::string render(const AnyScalar& value);
std::array<std::array<std::string, 3>, 3> render(const AnyMatrix& value);

}  // namespace jacobsthal
