#pragma once

#include "primsplit/embedding.hpp"
#include "primsplit/model.hpp"

#include <optional>
#include <vector>

namespace primsplit {

/// Surface model (dim 2) plus a list of degree-2 classes spanning the
/// algebraic sublattice; the Gram matrix under the degree-2 form must be
/// invertible.
struct SurfaceModel {
    CohomologyModel base;
    std::vector<Vec> algebraic_classes; // coordinates in the degree-2 basis
};

struct DegenerateFormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ClassNotSplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gram-Schmidt over Q against the degree-2 form, with pivoting past
/// isotropic vectors: when the running vector has self-pairing 0, a later
/// vector is swapped in, or mixed in with the smallest positive integer
/// coefficient that makes the self-pairing nonzero. Output spans the same
/// subspace, has diagonal Gram matrix with nonzero diagonal, and each vector
/// is scaled to primitive integer coordinates with positive leading entry.
/// Throws DegenerateFormError when the input Gram matrix is singular.
std::vector<Vec> orthogonalize_classes(const SurfaceModel& s);

/// The degree-2 block projecting onto the span of the classes along its
/// pairing-orthogonal complement: x -> sum_i (<x, d_i>/<d_i, d_i>) d_i over
/// an orthogonal basis. Independent of the chosen orthogonal basis.
Matrix algebraic_projector(const CohomologyModel& base, const std::vector<Vec>& classes);

struct ChowLefschetzPieces {
    GradedMap pi0, pi1, pi2_alg, pi2_tr, pi3, pi4;
    std::optional<GradedMap> pi2_alg_fix, pi2_alg_var, pi2_tr_fix, pi2_tr_var;
    Report report;
};

/// Degreewise pieces pi_0, pi_1, pi_3, pi_4, the algebraic projector
/// pi_2^alg on degree 2, and pi_2^tr = pi_2 - pi_2^alg; verifies that all
/// six are idempotent, mutually annihilating, summing to the identity, and
/// that the degree-2 pieces are self-adjoint for the pairing.
ChowLefschetzPieces chow_lefschetz(const SurfaceModel& s);

/// Fixed/variable components (pi_fix c, pi_var c) of a degree-2 class.
std::pair<Vec, Vec> split_class(const SplitResult& s, const Vec& cls);

/// Refinement along an embedding with e.sub = s.base: classes are sorted
/// into Im i^* (fixed) and Ker i_* (variable), orthogonalized within each
/// part, and the refined pieces are built:
///   pi_2^{alg,fix/var} from the per-part classes,
///   pi_2^{tr,var} = pi_var - pi_2^{alg,var},
///   pi_2^{tr,fix} = pi_2^tr - pi_2^{tr,var}.
/// A class in neither part raises ClassNotSplitError unless auto_split is
/// set, in which case it is replaced by its nonzero fixed and variable
/// components first. Verifies the refined sum, idempotence, pairwise
/// vanishing, pi_2^{alg,fix} + pi_2^{alg,var} = pi_2^alg, and that pi_var
/// is concentrated in degree 2.
ChowLefschetzPieces refine_with_splitting(const SurfaceModel& s, const EmbeddingModel& e,
                                          bool auto_split = false);

} // namespace primsplit
