#include "jacobsthal/identity_suite.hpp"

#include <charconv>

#include "jacobsthal/classic_sequences.hpp"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/matrix_sequences.hpp"
#include "jacobsthal/scalar_sequences.hpp"

namespace jacobsthal {

namespace {

long parse_long(std::string_view text, std::string_view whole) {
    long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw UsageError("malformed range '" + std::string(whole) + "'");
    }
    return value;
}

Rational classic_rational(const Integer& value) { return Rational(value); }

// Each check computes its sides through different code paths: closed-form
// assembly from scalar terms, square-and-multiply powers, explicit products,
// or the matrix recurrence definitions.
std::vector<IdentityDef> build_registry() {
    std::vector<IdentityDef> out;
    const IdentityDomain mn{.n_min = 1, .uses_m = true, .m_min = 1};
    const IdentityDomain n1{.n_min = 1};
    const IdentityDomain n2{.n_min = 2};

    out.push_back(make_identity("commute_JJ", mn, [](const auto& k, long m, long n) {
        const auto jm = J_power(k, m);
        const auto jn = J_power(k, n);
        return compare(assemble_J_closed_form(k, m + n), mat3_mul(jm, jn), mat3_mul(jn, jm));
    }));
    out.push_back(make_identity("commute_jj", mn, [](const auto& k, long m, long n) {
        const auto jm = assemble_j_closed_form(k, m);
        const auto jn = assemble_j_closed_form(k, n);
        return compare(mat3_mul(jm, jn), mat3_mul(jn, jm));
    }));
    out.push_back(make_identity("commute_Jj", mn, [](const auto& k, long m, long n) {
        const auto Jm = J_power(k, m);
        const auto jn = assemble_j_closed_form(k, n);
        return compare(mat3_mul(Jm, jn), mat3_mul(jn, Jm));
    }));
    out.push_back(make_identity("lincomb_eq1", n2, [](const auto& k, long, long n) {
        using S = std::decay_t<decltype(k)>;
        const S two_k = S(2) * k;
        return compare(assemble_j_closed_form(k, n),
                       (k - S(1)) * J_power(k, n) + two_k * J_power(k, n - 1) +
                           two_k * J_power(k, n - 2));
    }));
    out.push_back(make_identity("lincomb_eq2", n2, [](const auto& k, long, long n) {
        using S = std::decay_t<decltype(k)>;
        return compare(assemble_j_closed_form(k, n),
                       S(2) * J_power(k, n + 1) + (S(1) - k) * J_power(k, n) +
                           S(2) * J_power(k, n - 1));
    }));
    out.push_back(make_identity("square_a1", n1, [](const auto& k, long, long n) {
        const auto j_next = j_power(k, n + 1);
        const auto j1 = j_power(k, 1);
        return compare(mat3_mul(j_next, j_next), mat3_mul(mat3_mul(j1, j1), J_power(k, 2 * n)));
    }));
    out.push_back(make_identity("split_a2", n1, [](const auto& k, long, long n) {
        return compare(assemble_j_closed_form(k, 2 * n + 1),
                       mat3_mul(J_power(k, n), j_power(k, n + 1)));
    }));
    out.push_back(make_identity("addition_jmn", mn, [](const auto& k, long m, long n) {
        return compare(assemble_j_closed_form(k, m + n), mat3_mul(j_power(k, m), J_power(k, n)),
                       mat3_mul(J_power(k, m), j_power(k, n)));
    }));
    out.push_back(make_identity("det_J_formula", n1, [](const auto& k, long, long n) {
        return compare(mat3_det(J_power(k, n)), pow(k, n));
    }));
    out.push_back(make_identity("det_j_formula", n1, [](const auto& k, long, long n) {
        using S = std::decay_t<decltype(k)>;
        const S kp1 = k + S(1);
        return compare(mat3_det(j_power(k, n)), kp1 * kp1 * (k * k + k + S(2)) * pow(k, n - 1));
    }));
    out.push_back(make_identity("closed_form_J", n1, [](const auto& k, long, long n) {
        return compare(assemble_J_closed_form(k, n), J_power(k, n), M_matrix(k, n));
    }));
    out.push_back(make_identity("closed_form_j", n1, [](const auto& k, long, long n) {
        return compare(assemble_j_closed_form(k, n), j_power(k, n), N_matrix(k, n));
    }));
    out.push_back(make_identity("neg_matrix_theorem", n1, [](const auto& k, long, long n) {
        const auto m1 = generator_matrix(k);
        return compare(assemble_J_closed_form(k, -n), mat3_pow(mat3_inverse(m1), n),
                       mat3_inverse(mat3_pow(m1, n)));
    }));
    out.push_back(make_identity("neg_binet", n1, [](const auto& k, long, long n) {
        return compare(jac3_term(k, -n), jac3_binet(k, -n));
    }));
    out.push_back(make_identity("neg_scalar_lucas", n1, [](const auto& k, long, long n) {
        using S = std::decay_t<decltype(k)>;
        return compare(lucas3_term(k, -n), S(2) * jac3_term(k, -(n - 1)) +
                                                (S(1) - k) * jac3_term(k, -n) +
                                                S(2) * jac3_term(k, -(n + 1)));
    }));
    out.push_back(make_identity("neg_generating_b1", n1, [](const auto& k, long, long n) {
        const auto j0 = lucas_seed_matrix(k);
        const auto J1_neg = mat3_pow(generator_matrix(k), -n);
        return compare(assemble_j_closed_form(k, -n), mat3_mul(J1_neg, j0), mat3_mul(j0, J1_neg));
    }));
    out.push_back(make_identity("inverse_b2", n1, [](const auto& k, long, long n) {
        const auto j0 = lucas_seed_matrix(k);
        const auto jn = j_power(k, n);
        const auto j_neg = assemble_j_closed_form(k, -n);
        const auto det_j0 = mat3_det(j0);
        if (is_unit(det_j0)) {
            const auto j0_inv = mat3_inverse(j0);
            return compare(mat3_inverse(jn), mat3_mul(mat3_mul(j0_inv, j_neg), j0_inv));
        }
        // det j_0 = (k+1)^2 (k^2+k+2)/k is not a Laurent unit. Clear both
        // inverses through adjugates: X^-1 = adj(X)/det(X), so the identity
        // is equivalent to adj(j_n) det(j_0)^2 = adj(j_0) j_{-n} adj(j_0) det(j_n).
        const auto adj_j0 = mat3_adjugate(j0);
        return compare((det_j0 * det_j0) * mat3_adjugate(jn),
                       mat3_det(jn) * mat3_mul(mat3_mul(adj_j0, j_neg), adj_j0));
    }));

    const IdentityDomain classic_rn{.n_min = 0, .uses_m = true, .m_min = 1, .k_independent = true};
    const IdentityDomain classic_n{.n_min = 0, .k_independent = true};
    out.push_back(make_identity("multi_index_m1", classic_rn, [](const auto&, long r, long n) {
        const long rn = r * n;
        Integer m2 = 1;
        mpz_mul_2exp(m2.get_mpz_t(), m2.get_mpz_t(), static_cast<unsigned long>(rn + 1));
        m2 -= residue_z(rn);
        m2 /= 7;
        return compare(classic_rational(jac3_multi_index(r, n)), jac3_term(Rational(2), rn),
                       classic_rational(m2));
    }));
    out.push_back(make_identity("classic_binet_b1", classic_n, [](const auto&, long, long n) {
        return compare(classic_rational(jac3_classic(n)), jac3_term(Rational(2), n));
    }));
    out.push_back(make_identity("classic_binet_b2", classic_n, [](const auto&, long, long n) {
        return compare(classic_rational(modified_lucas_classic(n)),
                       classic_rational(modified_lucas_recurrence(n)));
    }));
    return out;
}

std::vector<IdentityDef> build_extensions() {
    std::vector<IdentityDef> out;
    const IdentityDomain any{.n_min = LONG_MIN, .uses_m = true, .m_min = LONG_MIN};
    out.push_back(make_identity(
        "addition_mixed_sign", any,
        [](const auto& k, long m, long n) {
            const auto jm = J_power(k, m);
            const auto jn = J_power(k, n);
            return compare(assemble_J_closed_form(k, m + n), mat3_mul(jm, jn), mat3_mul(jn, jm));
        },
        /*extension=*/true));
    return out;
}

void require_range(const IndexRange& range, long minimum, const std::string& what,
                   const std::string& identity) {
    if (range.empty()) throw UsageError("empty " + what + " range " + range.to_string());
    if (range.lo < minimum) {
        throw UsageError(identity + " requires " + what + " >= " + std::to_string(minimum) +
                         ", got " + range.to_string());
    }
}

IndexRange clamp(IndexRange range, long minimum) {
    range.lo = std::max(range.lo, minimum);
    range.hi = std::max(range.hi, range.lo);
    return range;
}

}  // namespace

IndexRange IndexRange::parse(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const long v = parse_long(text, text);
        return {v, v};
    }
    IndexRange out{parse_long(text.substr(0, dots), text), parse_long(text.substr(dots + 2), text)};
    if (out.empty()) throw UsageError("empty range '" + std::string(text) + "'");
    return out;
}

const std::vector<IdentityDef>& identity_registry() {
    static const std::vector<IdentityDef> registry = build_registry();
    return registry;
}

const std::vector<IdentityDef>& extension_registry() {
    static const std::vector<IdentityDef> registry = build_extensions();
    return registry;
}

const IdentityDef& find_identity(std::string_view name) {
    for (const auto* registry : {&identity_registry(), &extension_registry()}) {
        for (const IdentityDef& def : *registry) {
            if (def.name == name) return def;
        }
    }
    throw UsageError("unknown identity '" + std::string(name) + "'");
}

VerificationReport verify_identity(const IdentityDef& identity, const std::vector<KValue>& k_set,
                                   IndexRange n_range, std::optional<IndexRange> m_range) {
    const IdentityDomain& domain = identity.domain;
    if (k_set.empty()) throw UsageError("empty k set");
    require_range(n_range, domain.n_min, "n", identity.name);
    if (domain.uses_m) {
        if (!m_range) throw UsageError(identity.name + " requires an m range");
        require_range(*m_range, domain.m_min, "m", identity.name);
    } else {
        m_range.reset();
    }

    VerificationReport report;
    report.identity = identity.name;
    report.extension = identity.extension;
    report.k_set = domain.k_independent ? std::vector<KValue>{KValue::fixed(Rational(2))} : k_set;
    report.n_range = n_range;
    report.m_range = m_range;

    const IndexRange ms = m_range.value_or(IndexRange{0, 0});
    for (const KValue& k : report.k_set) {
        for (long m = ms.lo; m <= ms.hi; ++m) {
            for (long n = n_range.lo; n <= n_range.hi; ++n) {
                ++report.checks_performed;
                Comparison result = k.is_symbolic()
                                        ? identity.check_symbolic(Laurent::k(), m, n)
                                        : identity.check_fixed(k.value(), m, n);
                if (result.equal) continue;
                report.passed = false;
                report.counterexample = Counterexample{
                    k.to_string(), m_range ? std::optional<long>(m) : std::nullopt, n,
                    std::move(result.lhs), std::move(result.rhs)};
                return report;
            }
        }
    }
    return report;
}

VerificationReport verify_identity(std::string_view name, const std::vector<KValue>& k_set,
                                   IndexRange n_range, std::optional<IndexRange> m_range) {
    return verify_identity(find_identity(name), k_set, n_range, m_range);
}

std::vector<VerificationReport> verify_all(const std::vector<KValue>& k_set, IndexRange n_range,
                                           IndexRange m_range) {
    if (n_range.empty()) throw UsageError("empty n range " + n_range.to_string());
    if (m_range.empty()) throw UsageError("empty m range " + m_range.to_string());
    std::vector<VerificationReport> reports;
    reports.reserve(identity_registry().size());
    for (const IdentityDef& def : identity_registry()) {
        const std::optional<IndexRange> m =
            def.domain.uses_m ? std::optional<IndexRange>(clamp(m_range, def.domain.m_min))
                              : std::nullopt;
        reports.push_back(verify_identity(def, k_set, clamp(n_range, def.domain.n_min), m));
    }
    return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (!r.passed) return false;
    }
    return true;
}

std::vector<KValue> default_k_set() {
    return {KValue::fixed(Rational(1, 2)), KValue::fixed(Rational(1)), KValue::fixed(Rational(2)),
            KValue::fixed(Rational(3)),    KValue::fixed(Rational(7, 3)), KValue::symbolic()};
}

}  // namespace jacobsthal
