#pragma once

#include "primsplit/model.hpp"

#include <vector>

namespace primsplit {

/// One Lefschetz summand L^m P^{k-2m} inside degree k.
struct StringSummand {
    std::size_t power;            // m
    std::size_t primitive_degree; // k - 2m
    Matrix basis;                 // b_k x dim, columns in the model basis of H^k
};

struct PrimitiveDecomposition {
    std::vector<std::size_t> primitive_rank;       // per degree 0..2n
    std::vector<Matrix> primitive_basis;           // per degree: basis of P^k inside H^k
    std::vector<std::vector<StringSummand>> summands; // per degree
    Report report;                                 // exhaustion / independence / orthogonality
};

/// Everything the Lefschetz pipeline produces for one verified model.
struct LefschetzAnalysis {
    GradedMap lambda;          // shift -2, partial inverse of L
    GradedMap pr_projector;    // id - L o lambda
    PrimitiveDecomposition decomposition;
    Report report;             // lambda identities + projector checks
};

/// Requires validate_model and verify_hard_lefschetz to pass. Computes the
/// primitive subspaces P^k = Ker(L^{n-k+1} : H^k -> H^{2n-k+2}), decomposes
/// every degree into strings L^m P, and reads lambda off the strings:
/// lambda(L^m p) = L^{m-1} p, lambda(p) = 0. Throws InternalError if the
/// strings fail to exhaust a degree (impossible once hard Lefschetz holds).
LefschetzAnalysis analyze_lefschetz(const CohomologyModel& m);

GradedMap build_lambda(const CohomologyModel& m);
GradedMap primitive_projector(const CohomologyModel& m);
PrimitiveDecomposition primitive_decomposition(const CohomologyModel& m);

/// The two exact identities making lambda a partial inverse of L:
/// L o lambda o L = L (so L o lambda is the identity on Im L) and
/// lambda o L o lambda = lambda; plus idempotence of L o lambda and
/// Ker lambda = primitive subspaces, degree by degree.
Report verify_lambda_identities(const CohomologyModel& m, const GradedMap& lambda);

} // namespace primsplit
