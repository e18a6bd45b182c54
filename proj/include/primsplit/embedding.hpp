#pragma once

#include "primsplit/lefschetz.hpp"
#include "primsplit/model.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace primsplit {

/// Complete-intersection style embedding datum (M, X, r): restriction i^*
/// (shift 0) and Gysin pushforward i_* (shift +2r) between the two models,
/// subject to the composition, intertwining and adjunction identities that
/// validate_embedding checks.
struct EmbeddingModel {
    CohomologyModel ambient; // dimension d + r
    CohomologyModel sub;     // dimension d
    std::size_t codim = 0;   // r >= 1
    GradedMap pullback;      // i^*: ambient -> sub, shift 0
    GradedMap pushforward;   // i_*: sub -> ambient, shift +2r

    friend bool operator==(const EmbeddingModel& a, const EmbeddingModel& b) = default;
};

/// Checks (degree by degree, all exact):
///   i_* i^* = L_M^r,  i^* i_* = L_X^r,  i^* L_M = L_X i^*,
///   adjunction <i_* x, m>_M = <x, i^* m>_X,
///   i^* iso below the middle of X, i_* iso above it,
/// plus codim >= 1 and dimension bookkeeping. Both models are expected to
/// pass validate_model and verify_hard_lefschetz first.
Report validate_embedding(const EmbeddingModel& e);

/// p_r = L_M^r o lambda_M^r on the ambient model; idempotence (and p_r^3 =
/// p_r, the composite used in the projector argument) are verified exactly.
struct PrProjector {
    GradedMap map;
    Report report;
};
PrProjector build_p_r(const EmbeddingModel& e);

struct SplitResult {
    GradedMap pi_fix, pi_var;           // shift-0 projectors on the sub model
    std::vector<Matrix> fixed_basis;    // per degree: columns spanning Im pi_fix
    std::vector<Matrix> variable_basis; // per degree: columns spanning Im pi_var
    std::vector<std::pair<std::size_t, std::size_t>> dims; // (fixed, variable) per degree
    Report report;
};

/// pi_fix = i^* o lambda_M^r o i_*, pi_var = id - pi_fix, in every degree.
/// Verifies idempotence, commutation, Im pi_fix = Im i^* and
/// Im pi_var = Ker i_*. Throws InternalError when a check fails on a
/// validated embedding.
SplitResult split(const EmbeddingModel& e);

/// p_r o i_* = i_* — exact on the middle degree of X, with a per-degree
/// record of where else it holds.
Report verify_pr_pushforward(const EmbeddingModel& e);

/// <u, v>_X = 0 for u in the fixed basis of degree k and v in the variable
/// basis of the complementary degree, all pairs, exact.
Report verify_orthogonality(const EmbeddingModel& e, const SplitResult& s);

/// Abstract stand-in for a cycle-group realization: two spaces C(X), C(M)
/// with maps push: C(X)->C(M), pull: C(M)->C(X) and a lambda action on C(M).
/// L^r is played by push o pull.
struct ModuleRealization {
    Matrix push;
    Matrix pull;
    Matrix lambda_action;
};

/// Preconditions: p := (push o pull) o lambda is idempotent and acts as the
/// identity on Im(push o pull) (i.e. lambda genuinely inverts L^r on its
/// image). Then verifies
///   statement 1:  Im(id - pull o lambda o p o push) = Ker(p o push),
///   statement 2:  Im(q) contained in Im(pull) and q o pull onto Im(q),
/// with q = pull o lambda o p o push, reporting all ranks.
Report check_module_realization(const EmbeddingModel& e, const ModuleRealization& real);

/// The cohomological realization of the embedding itself: C = total graded
/// space, maps assembled blockwise, lambda action = lambda_M^r.
ModuleRealization self_realization(const EmbeddingModel& e);

/// Conjugates a realization by random unimodular changes of basis on both
/// spaces; every identity is basis-independent, so checks must still pass.
ModuleRealization conjugate_realization(const ModuleRealization& real, std::uint64_t seed);

} // namespace primsplit
