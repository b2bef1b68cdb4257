#include "jacobsthal/classic_sequences.hpp"

#include <string>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/scalar_sequences.hpp"

namespace jacobsthal {

namespace {

long mod3(long n) {
    const long r = n % 3;
    return r < 0 ? r + 3 : r;
}

Integer power_of_two(long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return out;
}

void require_nonnegative(long n, const char* what) {
    if (n < 0) {
        throw DomainError(std::string(what) + " requires n >= 0, got " + std::to_string(n));
    }
}

}  // namespace

int residue_z(long n) {
    switch (mod3(n)) {
        case 0: return 2;
        case 1: return -3;
        default: return 1;
    }
}

int residue_y(long n) { return mod3(n) == 0 ? 2 : -1; }

Integer jac3_classic(long n) {
    require_nonnegative(n, "jac3_classic");
    const Integer numerator = power_of_two(n + 1) - residue_z(n);
    if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 7)) {
        throw ConsistencyError("7 does not divide 2^(n+1) - Z_n at n = " + std::to_string(n));
    }
    return Integer(numerator / 7);
}

Integer modified_lucas_classic(long n) {
    require_nonnegative(n, "modified_lucas_classic");
    return Integer(power_of_two(n) + residue_y(n));
}

Integer modified_lucas_recurrence(long n) {
    require_nonnegative(n, "modified_lucas_recurrence");
    Integer k0 = 3;
    Integer k1 = 1;
    Integer k2 = 3;
    if (n == 0) return k0;
    if (n == 1) return k1;
    for (long i = 3; i <= n; ++i) {
        Integer next = k2 + k1 + 2 * k0;
        k0 = std::move(k1);
        k1 = std::move(k2);
        k2 = std::move(next);
    }
    return k2;
}

Integer lucas3_classic(long n) {
    const Rational value = lucas3_term(Rational(2), n);
    if (!value.is_integer()) {
        throw DomainError("j_n(2) is not an integer at n = " + std::to_string(n));
    }
    return value.numerator();
}

Integer jac3_multi_index(long r, long n) {
    if (r < 1) throw DomainError("stride r must be >= 1, got " + std::to_string(r));
    require_nonnegative(n, "jac3_multi_index");

    const Integer two_r = power_of_two(r);
    const Integer c2 = modified_lucas_classic(r);
    const Integer c1 = two_r * residue_y(r) + 1;

    Integer x0 = 0;
    Integer x1 = jac3_classic(r);
    Integer x2 = jac3_classic(2 * r);
    if (n == 0) return x0;
    if (n == 1) return x1;
    for (long i = 3; i <= n; ++i) {
        Integer next = c2 * x2 - c1 * x1 + two_r * x0;
        x0 = std::move(x1);
        x1 = std::move(x2);
        x2 = std::move(next);
    }
    return x2;
}

}  // namespace jacobsthal
