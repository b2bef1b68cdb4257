#pragma once

/**
 * Third-order k-Jacobsthal (J), k-Jacobsthal-Lucas (j) and the derived T, t
 * sequences at any integer index.
 *
 * All four share the characteristic polynomial
 *   x^3 - (k-1)x^2 - (k-1)x - k = (x - k)(x^2 + x + 1),
 * so terms can be produced by the linear recurrence (the reference route) or
 * by the Binet form over the cube roots of unity (the Omega extension).
 */

#include <array>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/kvalue.hpp"
#include "jacobsthal/omega.hpp"
#include "jacobsthal/scalar.hpp"

namespace jacobsthal {

enum class SequenceFamily { J, j, T, t };

/// Term x_n of x_{n+3} = (k-1)x_{n+2} + (k-1)x_{n+1} + k x_n with
/// seeds = {x_0, x_1, x_2}. Negative n walks the inverted recurrence
///   x_{m} = ((1-k)/k) x_{m+1} + ((1-k)/k) x_{m+2} + (1/k) x_{m+3}.
/// O(|n|) ring operations.
template <Scalar S>
S recurrence_term(const S& k, const std::array<S, 3>& seeds, long n) {
    if (n >= 0 && n < 3) return seeds[static_cast<std::size_t>(n)];
    const S one(1);
    S x0 = seeds[0];
    S x1 = seeds[1];
    S x2 = seeds[2];
    if (n > 0) {
        const S c = k - one;
        for (long i = 3; i <= n; ++i) {
            S next = c * x2 + c * x1 + k * x0;
            x0 = std::move(x1);
            x1 = std::move(x2);
            x2 = std::move(next);
        }
        return x2;
    }
    const S inv_k = unit_inverse(k);
    const S c = (one - k) * inv_k;
    for (long i = -1; i >= n; --i) {
        S prev = c * x0 + c * x1 + inv_k * x2;
        x2 = std::move(x1);
        x1 = std::move(x0);
        x0 = std::move(prev);
    }
    return x0;
}

/// J_n^(3)(k): seeds 0, 1, k-1.
template <Scalar S>
S jac3_term(const S& k, long n) {
    return recurrence_term<S>(k, {S(0), S(1), k - S(1)}, n);
}

/// j_n^(3)(k): seeds 2, k-1, k^2+1.
template <Scalar S>
S lucas3_term(const S& k, long n) {
    return recurrence_term<S>(k, {S(2), k - S(1), k * k + S(1)}, n);
}

/// T_n = (k-1) J_{n+1} + k J_n, used uniformly for every integer n.
template <Scalar S>
S T_term(const S& k, long n) {
    return (k - S(1)) * jac3_term(k, n + 1) + k * jac3_term(k, n);
}

/// t_n = (k-1) j_{n+1} + k j_n.
template <Scalar S>
S t_term(const S& k, long n) {
    return (k - S(1)) * lucas3_term(k, n + 1) + k * lucas3_term(k, n);
}

/**
 * J_n^(3)(k) from its Binet form, computed exactly in S[w]/(w^2+w+1):
 *
 *   n >= 0:  (k^{n+1} - (A w1^n - B w2^n)/(w1 - w2)) / (k^2 + k + 1)
 *   n <  0:  (k (1/k)^{|n|} + (B w1^{|n|} - A w2^{|n|})/(w1 - w2)) / (k^2 + k + 1)
 *
 * with w1 = w, w2 = -1 - w, A = w1 k - 1, B = w2 k - 1. The w-part of the
 * bracket must cancel and the final division must be exact; either failure
 * raises ConsistencyError.
 */
template <Scalar S>
S jac3_binet(const S& k, long n) {
    using W = Omega<S>;
    const W w1 = W::root1();
    const W w2 = W::root2();
    const W A = w1 * W(k) - W(S(1));
    const W B = w2 * W(k) - W(S(1));

    W bracket;
    if (n >= 0) {
        const auto e = static_cast<unsigned long>(n);
        bracket = W(pow(k, n + 1)) - omega_div_root_diff(A * pow(w1, e) - B * pow(w2, e));
    } else {
        const auto e = static_cast<unsigned long>(-n);
        bracket = W(k * pow(unit_inverse(k), -n)) +
                  omega_div_root_diff(B * pow(w1, e) - A * pow(w2, e));
    }
    if (!bracket.is_scalar()) {
        throw ConsistencyError("Binet bracket kept a w-component at n = " + std::to_string(n) +
                               ": " + bracket.to_string());
    }
    try {
        return exact_div(bracket.a, k * k + k + S(1));
    } catch (const InexactDivision& e) {
        throw ConsistencyError(std::string("Binet division not exact: ") + e.what());
    }
}

template <Scalar S>
S sequence_term(SequenceFamily family, const S& k, long n) {
    switch (family) {
        case SequenceFamily::J: return jac3_term(k, n);
        case SequenceFamily::j: return lucas3_term(k, n);
        case SequenceFamily::T: return T_term(k, n);
        case SequenceFamily::t: return t_term(k, n);
    }
    throw UsageError("unknown sequence family");
}

/// One evaluated term, tagged with where it came from.
struct SequenceTerm {
    SequenceFamily family;
    long index;
    AnyScalar value;
};

SequenceTerm evaluate_term(SequenceFamily family, const KValue& k, long n);
AnyScalar evaluate_binet(const KValue& k, long n);

}  // namespace jacobsthal
