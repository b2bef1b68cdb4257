#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/matrix_sequences.hpp"
#include "support.hpp"

using namespace jacobsthal;
using test::k;
using test::R;

namespace {

using LM = Matrix3<Laurent>;
using RM = Matrix3<Rational>;

Laurent lone() { return Laurent(1); }
Laurent inv_k() { return pow(k(), -1); }

// Negative-index layout exactly as displayed for J_{-n}(k): rows indexed
// -(n-1), -n, -(n+1), with T_{-m} = (k-1) J_{-(m-1)} + k J_{-m}.
LM negative_layout(long n) {
    const auto J = [](long i) { return jac3_term(k(), i); };
    const auto T = [&](long m) { return (k() - lone()) * J(-(m - 1)) + k() * J(-m); };
    return {{J(-(n - 1)), T(n + 1), k() * J(-n)},
            {J(-n), T(n + 2), k() * J(-(n + 1))},
            {J(-(n + 1)), T(n + 3), k() * J(-(n + 2))}};
}

}  // namespace

TEST_CASE("M family") {
    CHECK(M_matrix(k(), 0) == LM::identity());
    const LM m1{{k() - lone(), k() - lone(), k()}, {lone(), Laurent(), Laurent()}, {Laurent(), lone(), Laurent()}};
    CHECK(M_matrix(k(), 1) == m1);
    CHECK(M_matrix(R(2), 4) == mat3_pow(generator_matrix(R(2)), 4));
    CHECK_THROWS_AS(M_matrix(k(), -1), DomainError);
}

TEST_CASE("N family") {
    const LM n0 = N_matrix(k(), 0);
    CHECK(n0(2, 0) == Laurent::monomial(R(2), -1));
    CHECK(n0(2, 1) == Laurent::monomial(R(2), -1));
    CHECK(n0(2, 2) == -(k() * k() + k() - Laurent(2)) * inv_k());
    const LM n2 = N_matrix(k(), 2);
    const Laurent k3 = k() * k() * k();
    CHECK(n2(0, 0) == k3 + k());
    CHECK(n2(0, 1) == k3 - lone());
    CHECK(n2(0, 2) == k3 + k());
    CHECK(N_matrix(R(2), 3) == mat3_mul(lucas_seed_matrix(R(2)), mat3_pow(generator_matrix(R(2)), 3)));
    const RM n20{{R(1), R(4), R(4)}, {R(2), R(-1), R(2)}, {R(1), R(1), R(-2)}};
    CHECK(N_matrix(R(2), 0) == n20);
    CHECK_THROWS_AS(N_matrix(R(2), -1), DomainError);
}

TEST_CASE("J_n and j_n") {
    CHECK(J_power(k(), 0) == LM::identity());
    const LM m_inv{{Laurent(), lone(), Laurent()},
                   {Laurent(), Laurent(), lone()},
                   {inv_k(), (lone() - k()) * inv_k(), (lone() - k()) * inv_k()}};
    CHECK(J_power(k(), -1) == m_inv);
    CHECK(J_power(R(2), 5) == M_matrix(R(2), 5));

    CHECK(j_power(k(), 0) == lucas_seed_matrix(k()));
    CHECK(j_power(k(), 1) == N_matrix(k(), 1));
    const Rational kv(2);
    CHECK(j_power(kv, -1) ==
          R(2) * J_power(kv, 0) + (R(1) - kv) * J_power(kv, -1) + R(2) * J_power(kv, -2));
}

TEST_CASE("closed-form assembly") {
    CHECK(assemble_J_closed_form(k(), 1) == generator_matrix(k()));
    CHECK(assemble_J_closed_form(k(), -1) == J_power(k(), -1));
    CHECK(assemble_J_closed_form(R(2), 6) == J_power(R(2), 6));
    CHECK(assemble_j_closed_form(k(), 1) == N_matrix(k(), 1));
    CHECK(assemble_j_closed_form(k(), 0) == lucas_seed_matrix(k()));
    CHECK(assemble_j_closed_form(R(2), 4) == j_power(R(2), 4));
}

TEST_CASE("negative layout matches the displayed form") {
    for (long n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(assemble_J_closed_form(k(), -n) == negative_layout(n));
    }
    // Base case written out term by term.
    const auto J = [](long i) { return jac3_term(k(), i); };
    const auto c = k() - lone();
    const LM base{{J(0), c * J(-1) + k() * J(-2), k() * J(-1)},
                  {J(-1), c * J(-2) + k() * J(-3), k() * J(-2)},
                  {J(-2), c * J(-3) + k() * J(-4), k() * J(-3)}};
    CHECK(base == J_power(k(), -1));
    CHECK(negative_layout(2) == J_power(k(), -2));
}

TEST_CASE("routes agree over index ranges") {
    for (long n = 0; n <= 15; ++n) {
        CAPTURE(n);
        CHECK(M_matrix(k(), n) == J_power(k(), n));
        CHECK(N_matrix(k(), n) == j_power(k(), n));
        CHECK(M_matrix(R(7, 3), n) == J_power(R(7, 3), n));
        CHECK(N_matrix(R(1, 2), n) == j_power(R(1, 2), n));
    }
    for (long n = -10; n <= 15; ++n) {
        CAPTURE(n);
        CHECK(assemble_J_closed_form(k(), n) == J_power(k(), n));
        CHECK(assemble_j_closed_form(k(), n) == j_power(k(), n));
    }
}

TEST_CASE("determinants") {
    CHECK(det_J(k(), 3) == pow(k(), 3));
    CHECK(det_J(R(2), 3) == R(8));
    CHECK(det_J(k(), -1) == inv_k());
    CHECK(det_j(R(2), 0) == R(36));
    CHECK(det_j(R(2), 1) == R(72));
    const Laurent kp1 = k() + lone();
    CHECK(det_j(k(), 1) == kp1 * kp1 * (k() * k() + k() + Laurent(2)));
    for (long n = -5; n <= 12; ++n) {
        CHECK_NOTHROW(det_J(k(), n));
        CHECK_NOTHROW(det_j(k(), n));
    }
}

TEST_CASE("structural facts") {
    const LM m = generator_matrix(k());
    const LM n0 = lucas_seed_matrix(k());
    CHECK(characteristic_residual(k()) == LM());
    CHECK(characteristic_residual(R(7, 3)) == RM());
    CHECK(mat3_mul(n0, m) == mat3_mul(m, n0));

    const LM m_inv = mat3_inverse(m);
    const LM m_inv2 = mat3_mul(m_inv, m_inv);
    const Laurent two_k = Laurent(2) * k();
    CHECK(n0 == (k() - lone()) * LM::identity() + two_k * m_inv + two_k * m_inv2);
    CHECK(n0 == Laurent(2) * m + (lone() - k()) * LM::identity() + Laurent(2) * m_inv);
}

TEST_CASE("dynamic evaluation") {
    const MatrixFamilyTerm t = evaluate_matrix(MatrixFamily::Jmat, KValue::symbolic(), -1);
    const auto r = render(t.matrix);
    CHECK(r[2][0] == "k^-1");
    CHECK(r[2][1] == "-1 + k^-1");
    CHECK_THROWS_AS(evaluate_matrix(MatrixFamily::M, KValue::symbolic(), -1), DomainError);
}
