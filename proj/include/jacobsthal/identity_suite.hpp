#pragma once

/**
 * Registry of the matrix and scalar identities as machine-checkable
 * predicates, and the grid verifier that evaluates them.
 *
 * Every check returns an exact Comparison; there is no tolerance. Where an
 * identity states several equal expressions, the left-hand side is compared
 * against each right-hand side in order and the first mismatch is reported.
 *
 * Grid order is lexicographic in (k, m, n) with k in the order given; the
 * verifier stops at the first failing point so the counterexample is always
 * the lexicographically first one.
 */

#include <climits>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jacobsthal/kvalue.hpp"
#include "jacobsthal/matrix3.hpp"

namespace jacobsthal {

using RenderedMatrix = std::array<std::array<std::string, 3>, 3>;
using Rendered = std::variant<std::string, RenderedMatrix>;

struct Comparison {
    bool equal = true;
    Rendered lhs;  // populated only on mismatch
    Rendered rhs;
};

inline Rendered render_value(const Rational& v) { return v.to_string(); }
inline Rendered render_value(const Laurent& v) { return v.to_string(); }
template <Scalar S>
Rendered render_value(const Matrix3<S>& v) {
    return v.render();
}

/// lhs against each rhs in turn; the first inequality is the result.
template <class V, class... Rest>
Comparison compare(const V& lhs, const V& rhs, const Rest&... more) {
    if (!(lhs == rhs)) return {false, render_value(lhs), render_value(rhs)};
    if constexpr (sizeof...(Rest) > 0) {
        return compare(lhs, more...);
    } else {
        return {};
    }
}

/// Inclusive integer range "lo..hi".
struct IndexRange {
    long lo = 0;
    long hi = -1;

    bool empty() const { return lo > hi; }
    std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
    std::string to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

    /// Parses "a..b" or a single integer "a". Throws UsageError.
    static IndexRange parse(std::string_view text);

    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct IdentityDomain {
    long n_min = 1;
    bool uses_m = false;
    long m_min = 1;
    /// Classic k = 2 statements: evaluated once per grid point, k ignored.
    bool k_independent = false;
};

struct IdentityDef {
    std::string name;
    IdentityDomain domain;
    /// Not a statement of the source theorems; a check of a natural extension.
    bool extension = false;
    std::function<Comparison(const Rational& k, long m, long n)> check_fixed;
    std::function<Comparison(const Laurent& k, long m, long n)> check_symbolic;
};

/// Wraps a generic (k, m, n) -> Comparison callable for both scalar rings.
template <class Check>
IdentityDef make_identity(std::string name, IdentityDomain domain, Check check,
                          bool extension = false) {
    return {std::move(name), domain, extension,
            [check](const Rational& k, long m, long n) { return check(k, m, n); },
            [check](const Laurent& k, long m, long n) { return check(k, m, n); }};
}

struct Counterexample {
    std::string k;
    std::optional<long> m;
    long n = 0;
    Rendered lhs;
    Rendered rhs;
};

struct VerificationReport {
    std::string identity;
    std::vector<KValue> k_set;
    IndexRange n_range;
    std::optional<IndexRange> m_range;
    bool passed = true;
    std::optional<Counterexample> counterexample;
    std::size_t checks_performed = 0;
    bool extension = false;
};

/// The twenty registered identities in canonical order.
const std::vector<IdentityDef>& identity_registry();

/// Non-source checks (currently J_{m+n} = J_m J_n at mixed signs).
const std::vector<IdentityDef>& extension_registry();

/// Looks up either registry; throws UsageError for unknown names.
const IdentityDef& find_identity(std::string_view name);

/// Evaluates one identity on k_set x m_range x n_range. Ranges must be
/// non-empty and inside the identity's domain (UsageError otherwise); the
/// m range is required exactly when the identity uses m.
VerificationReport verify_identity(const IdentityDef& identity, const std::vector<KValue>& k_set,
                                   IndexRange n_range, std::optional<IndexRange> m_range);

VerificationReport verify_identity(std::string_view name, const std::vector<KValue>& k_set,
                                   IndexRange n_range, std::optional<IndexRange> m_range);

/// One report per registered identity, each range clamped into the
/// identity's domain: the lower end is raised to the domain minimum and the
/// upper end to at least the new lower end.
std::vector<VerificationReport> verify_all(const std::vector<KValue>& k_set, IndexRange n_range,
                                           IndexRange m_range);

bool all_passed(const std::vector<VerificationReport>& reports);

/// Default sample set: 1/2, 1, 2, 3, 7/3 and symbolic k.
std::vector<KValue> default_k_set();

}  // namespace jacobsthal
