#include "jacobsthal/matrix_sequences.hpp"
#include "jacobsthal/scalar_sequences.hpp"

namespace jacobsthal {

SequenceTerm evaluate_term(SequenceFamily family, const KValue& k, long n) {
    return {family, n, with_k(k, [&](const auto& kv) -> AnyScalar {
                return sequence_term(family, kv, n);
            })};
}

AnyScalar evaluate_binet(const KValue& k, long n) {
    return with_k(k, [&](const auto& kv) -> AnyScalar { return jac3_binet(kv, n); });
}

MatrixFamilyTerm evaluate_matrix(MatrixFamily family, const KValue& k, long n) {
    return {family, n, k, with_k(k, [&](const auto& kv) -> AnyMatrix {
                return family_matrix(family, kv, n);
            })};
}

}  // namespace jacobsthal
