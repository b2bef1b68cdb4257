#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "jacobsthal/laurent.hpp"
#include "jacobsthal/matrix3.hpp"
#include "jacobsthal/rational.hpp"

namespace test {

using jacobsthal::Laurent;
using jacobsthal::Matrix3;
using jacobsthal::Rational;

inline Rational R(long p, long q = 1) { return Rational(p, q); }

/// Laurent polynomial from (exponent, coefficient) pairs.
inline Laurent L(std::initializer_list<std::pair<long, Rational>> terms) {
    Laurent out;
    for (const auto& [e, c] : terms) out += Laurent::monomial(c, e);
    return out;
}

inline const Laurent& k() {
    static const Laurent symbol = Laurent::k();
    return symbol;
}

/// Small random rationals and Laurent polynomials for property checks.
class Sampler {
public:
    explicit Sampler(unsigned seed) : rng_(seed) {}

    Rational rational() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 5);
        return Rational(num(rng_), den(rng_));
    }

    /// Up to max_terms terms with exponents in [lo, hi].
    Laurent laurent(long lo = -4, long hi = 4, int max_terms = 6) {
        std::uniform_int_distribution<int> count(0, max_terms);
        std::uniform_int_distribution<long> exponent(lo, hi);
        Laurent out;
        for (int i = count(rng_); i > 0; --i) out += Laurent::monomial(rational(), exponent(rng_));
        return out;
    }

    template <class S, class Gen>
    Matrix3<S> matrix(Gen gen) {
        Matrix3<S> m;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = gen();
        }
        return m;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace test
