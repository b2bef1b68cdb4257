#pragma once

/**
 * The four 3x3 matrix families:
 *
 *   M_{k,n}  recurrence definition, seeds M_{k,0} = I, M_{k,1}, M_{k,2}
 *   N_{k,n}  recurrence definition, seeds N_{k,0}, N_{k,1}, N_{k,2}
 *   J_n(k) = (M_{k,1})^n           any integer n (fast power)
 *   j_n(k) = N_{k,0} (M_{k,1})^n   any integer n
 *
 * plus the closed-form assembly of J_n / j_n from scalar terms and the
 * determinant formulas. Routes are kept separate so they can check each other.
 */

#include <string>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/kvalue.hpp"
#include "jacobsthal/matrix3.hpp"
#include "jacobsthal/scalar_sequences.hpp"

namespace jacobsthal {

enum class MatrixFamily { M, N, Jmat, jmat };

/// Generator (companion) matrix M_{k,1}.
template <Scalar S>
Matrix3<S> generator_matrix(const S& k) {
    const S km1 = k - S(1);
    return {{km1, km1, k}, {S(1), S(0), S(0)}, {S(0), S(1), S(0)}};
}

/// N_{k,0}, whose last row carries 2/k, 2/k, -(k^2+k-2)/k.
template <Scalar S>
Matrix3<S> lucas_seed_matrix(const S& k) {
    const S inv_k = unit_inverse(k);
    const S two_k = S(2) * k;
    return {{k - S(1), two_k, two_k},
            {S(2), S(1) - k, S(2)},
            {S(2) * inv_k, S(2) * inv_k, -(k * k + k - S(2)) * inv_k}};
}

namespace detail {

template <Scalar S>
Matrix3<S> matrix_recurrence(const S& k, const std::array<Matrix3<S>, 3>& seeds, long n,
                             const char* name) {
    if (n < 0) {
        throw DomainError(std::string(name) + " is defined for n >= 0 only, got " +
                          std::to_string(n));
    }
    if (n < 3) return seeds[static_cast<std::size_t>(n)];
    const S c = k - S(1);
    Matrix3<S> x0 = seeds[0];
    Matrix3<S> x1 = seeds[1];
    Matrix3<S> x2 = seeds[2];
    for (long i = 3; i <= n; ++i) {
        Matrix3<S> next = c * x2 + c * x1 + k * x0;
        x0 = std::move(x1);
        x1 = std::move(x2);
        x2 = std::move(next);
    }
    return x2;
}

}  // namespace detail

/// M_{k,n} via M_{k,n+3} = (k-1)M_{k,n+2} + (k-1)M_{k,n+1} + k M_{k,n}.
template <Scalar S>
Matrix3<S> M_matrix(const S& k, long n) {
    const S km1 = k - S(1);
    const Matrix3<S> m2{{k * k - k, k * k - k + S(1), k * k - k}, {km1, km1, k}, {S(1), S(0), S(0)}};
    return detail::matrix_recurrence<S>(k, {Matrix3<S>::identity(), generator_matrix(k), m2}, n,
                                        "M_{k,n}");
}

/// N_{k,n} via the same recurrence from the displayed seeds N_{k,0..2}.
template <Scalar S>
Matrix3<S> N_matrix(const S& k, long n) {
    const S km1 = k - S(1);
    const S k2 = k * k;
    const S k3 = k2 * k;
    const S two_k = S(2) * k;
    const Matrix3<S> n1{{k2 + S(1), k2 + S(1), k2 - k}, {km1, two_k, two_k}, {S(2), S(1) - k, S(2)}};
    const Matrix3<S> n2{{k3 + k, k3 - S(1), k3 + k}, {k2 + S(1), k2 + S(1), k2 - k}, {km1, two_k, two_k}};
    return detail::matrix_recurrence<S>(k, {lucas_seed_matrix(k), n1, n2}, n, "N_{k,n}");
}

/// J_n(k) = (M_{k,1})^n; always defined since det M_{k,1} = k is a unit.
template <Scalar S>
Matrix3<S> J_power(const S& k, long n) {
    return mat3_pow(generator_matrix(k), n);
}

/// j_n(k) = N_{k,0} J_n(k).
template <Scalar S>
Matrix3<S> j_power(const S& k, long n) {
    return mat3_mul(lucas_seed_matrix(k), J_power(k, n));
}

namespace detail {

template <Scalar S, class Term, class Shifted>
Matrix3<S> assemble(const S& k, long n, Term term, Shifted shifted) {
    return {{term(n + 1), shifted(n - 1), k * term(n)},
            {term(n), shifted(n - 2), k * term(n - 1)},
            {term(n - 1), shifted(n - 3), k * term(n - 2)}};
}

}  // namespace detail

/// Rows [J_{n+1}, T_{n-1}, kJ_n], [J_n, T_{n-2}, kJ_{n-1}], [J_{n-1}, T_{n-3}, kJ_{n-2}]
/// from the scalar recurrence. The same layout covers negative n.
template <Scalar S>
Matrix3<S> assemble_J_closed_form(const S& k, long n) {
    return detail::assemble<S>(
        k, n, [&](long i) { return jac3_term(k, i); }, [&](long i) { return T_term(k, i); });
}

/// Same layout with j and t.
template <Scalar S>
Matrix3<S> assemble_j_closed_form(const S& k, long n) {
    return detail::assemble<S>(
        k, n, [&](long i) { return lucas3_term(k, i); }, [&](long i) { return t_term(k, i); });
}

/// k^n, checked against the cofactor determinant of J_power(k, n).
template <Scalar S>
S det_J(const S& k, long n) {
    S formula = pow(k, n);
    const S direct = mat3_det(J_power(k, n));
    if (!(direct == formula)) {
        throw ConsistencyError("det J_n(k) = " + direct.to_string() + " but k^n = " +
                               formula.to_string() + " at n = " + std::to_string(n));
    }
    return formula;
}

/// (k+1)^2 (k^2+k+2) k^{n-1}, checked against the cofactor determinant of j_power(k, n).
template <Scalar S>
S det_j(const S& k, long n) {
    const S kp1 = k + S(1);
    S formula = kp1 * kp1 * (k * k + k + S(2)) * pow(k, n - 1);
    const S direct = mat3_det(j_power(k, n));
    if (!(direct == formula)) {
        throw ConsistencyError("det j_n(k) = " + direct.to_string() + " but the formula gives " +
                               formula.to_string() + " at n = " + std::to_string(n));
    }
    return formula;
}

/// M^3 - (k-1)M^2 - (k-1)M - kI for M = M_{k,1}; the zero matrix by Cayley-Hamilton.
template <Scalar S>
Matrix3<S> characteristic_residual(const S& k) {
    const Matrix3<S> m = generator_matrix(k);
    const Matrix3<S> m2 = mat3_mul(m, m);
    const Matrix3<S> m3 = mat3_mul(m2, m);
    const S c = k - S(1);
    return m3 - c * m2 - c * m - k * Matrix3<S>::identity();
}

template <Scalar S>
Matrix3<S> family_matrix(MatrixFamily family, const S& k, long n) {
    switch (family) {
        case MatrixFamily::M: return M_matrix(k, n);
        case MatrixFamily::N: return N_matrix(k, n);
        case MatrixFamily::Jmat: return J_power(k, n);
        case MatrixFamily::jmat: return j_power(k, n);
    }
    throw UsageError("unknown matrix family");
}

struct MatrixFamilyTerm {
    MatrixFamily family;
    long index;
    KValue k;
    AnyMatrix matrix;
};

MatrixFamilyTerm evaluate_matrix(MatrixFamily family, const KValue& k, long n);

}  // namespace jacobsthal
