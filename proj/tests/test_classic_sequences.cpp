#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacobsthal/classic_sequences.hpp"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/scalar_sequences.hpp"

using namespace jacobsthal;

TEST_CASE("residues") {
    CHECK(residue_z(0) == 2);
    CHECK(residue_z(4) == -3);
    CHECK(residue_z(-1) == 1);
    CHECK(residue_z(2) == 1);
    CHECK(residue_y(0) == 2);
    CHECK(residue_y(5) == -1);
    CHECK(residue_y(-3) == 2);
    for (long n = -9; n <= 30; ++n) {
        CHECK(residue_z(n) == residue_z(n + 3));
        CHECK(residue_y(n) == residue_y(n + 3));
    }
}

TEST_CASE("classic J") {
    CHECK(jac3_classic(0) == 0);
    CHECK(jac3_classic(5) == 9);
    CHECK(jac3_classic(9) == 146);
    CHECK_THROWS_AS(jac3_classic(-1), DomainError);
    for (long n = 0; n <= 30; ++n) {
        CHECK(Rational(jac3_classic(n)) == jac3_term(Rational(2), n));
    }
}

TEST_CASE("seven divides 2^(n+1) - Z_n") {
    for (long n = 0; n <= 60; ++n) {
        Integer v = 1;
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n + 1));
        v -= residue_z(n);
        CHECK(mpz_divisible_ui_p(v.get_mpz_t(), 7) != 0);
    }
}

TEST_CASE("modified K") {
    CHECK(modified_lucas_classic(0) == 3);
    CHECK(modified_lucas_classic(3) == 10);
    CHECK(modified_lucas_classic(4) == 15);
    CHECK(modified_lucas_recurrence(1) == 1);
    CHECK(modified_lucas_recurrence(2) == 3);
    CHECK_THROWS_AS(modified_lucas_classic(-2), DomainError);
    for (long n = 0; n <= 30; ++n) {
        CHECK(modified_lucas_classic(n) == modified_lucas_recurrence(n));
        CHECK(modified_lucas_classic(n + 3) == modified_lucas_classic(n + 2) +
                                                   modified_lucas_classic(n + 1) +
                                                   2 * modified_lucas_classic(n));
    }
}

TEST_CASE("classic j and K are different sequences") {
    CHECK(lucas3_classic(0) == 2);
    CHECK(lucas3_classic(1) == 1);
    CHECK(lucas3_classic(2) == 5);
    CHECK(lucas3_classic(3) == 10);
    CHECK(modified_lucas_classic(0) != lucas3_classic(0));
}

TEST_CASE("stride-r recurrence") {
    CHECK(jac3_multi_index(1, 6) == 18);
    CHECK(jac3_multi_index(2, 3) == 18);
    CHECK(jac3_multi_index(3, 0) == 0);
    CHECK_THROWS_AS(jac3_multi_index(0, 3), DomainError);
    CHECK_THROWS_AS(jac3_multi_index(-1, 3), DomainError);
    CHECK_THROWS_AS(jac3_multi_index(2, -1), DomainError);
    for (long r = 1; r <= 5; ++r) {
        for (long n = 0; n <= 10; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            CHECK(jac3_multi_index(r, n) == jac3_classic(r * n));
        }
    }
}
