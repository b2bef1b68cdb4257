#pragma once

/**
 * Quadratic extension S[w] / (w^2 + w + 1).
 *
 * Elements are a + b*w. The two primitive cube roots of unity are w itself
 * and -1 - w; their difference 2w + 1 squares to -3, which makes division by
 * it exact whenever 3 is invertible in S.
 */

#include <string>

#include "jacobsthal/scalar.hpp"

namespace jacobsthal {

template <Scalar S>
struct Omega {
    S a{0};
    S b{0};

    Omega() = default;
    Omega(S real) : a(std::move(real)) {}  // NOLINT(google-explicit-constructor)
    Omega(S real, S w_part) : a(std::move(real)), b(std::move(w_part)) {}

    /// w, the first root of x^2 + x + 1.
    static Omega root1() { return {S(0), S(1)}; }
    /// -1 - w, the second root.
    static Omega root2() { return {S(-1), S(-1)}; }

    bool is_scalar() const { return b == S(0); }

    Omega operator-() const { return {-a, -b}; }

    friend Omega operator+(const Omega& x, const Omega& y) { return {x.a + y.a, x.b + y.b}; }
    friend Omega operator-(const Omega& x, const Omega& y) { return {x.a - y.a, x.b - y.b}; }
    friend Omega operator*(const Omega& x, const Omega& y) { return omega_mul(x, y); }

    friend bool operator==(const Omega&, const Omega&) = default;

    std::string to_string() const {
        return "(" + a.to_string() + ") + (" + b.to_string() + ")w";
    }

    // (a1 + b1 w)(a2 + b2 w) with w^2 = -w - 1.
    friend Omega omega_mul(const Omega& x, const Omega& y) {
        const S bb = x.b * y.b;
        return {x.a * y.a - bb, x.a * y.b + y.a * x.b - bb};
    }
};

/// x / (w1 - w2) = x * (-(2w + 1) / 3).
template <Scalar S>
Omega<S> omega_div_root_diff(const Omega<S>& x) {
    const S third(Rational(-1, 3));
    return x * Omega<S>{third, S(2) * third};
}

template <Scalar S>
Omega<S> pow(const Omega<S>& base, unsigned long exponent) {
    Omega<S> result(S(1));
    Omega<S> square = base;
    for (; exponent != 0; exponent >>= 1) {
        if (exponent & 1U) result = result * square;
        if (exponent > 1) square = square * square;
    }
    return result;
}

}  // namespace jacobsthal
