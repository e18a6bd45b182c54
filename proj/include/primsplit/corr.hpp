#pragma once

#include "primsplit/matrix.hpp"
#include "primsplit/report.hpp"

#include <cstdint>
#include <optional>

namespace primsplit {

/// Element of a matrix correspondence algebra. The designated basis singles
/// out the represented subalgebra (matrices upper triangular in that basis);
/// on it the diagonal part is an algebra quotient map and plays the role of
/// the semisimple "cohomological action". The degree tag is bookkeeping
/// metadata, additive under composition; it never touches the arithmetic.
struct AlgebraElement {
    Matrix mat;
    Matrix realization_basis; // invertible; identity means "already triangular"
    int degree = 0;
};

/// Composition a o b: matrix product, degree tags add. Requires a shared
/// realization basis.
AlgebraElement compose(const AlgebraElement& a, const AlgebraElement& b);

/// The element written in its realization basis: g^{-1} a g.
Matrix in_realization_basis(const AlgebraElement& a);

/// True when the element lies in the represented (upper triangular) subalgebra.
bool in_represented_subalgebra(const AlgebraElement& a);

/// Diagonal part in the realization basis, conjugated back: the semisimple
/// quotient image. Only meaningful on the represented subalgebra.
Matrix realization(const AlgebraElement& a);

/// If the realization vanishes, reports the nilpotency index of the matrix
/// (triviality of the semisimple action forces nilpotence in these models);
/// otherwise reports that the hypothesis is not met.
Report check_nilpotent_action(const AlgebraElement& a);

/// Least N with (e^2 - e)^N = 0, or nullopt when the defect from being
/// idempotent is not nilpotent (then no lift exists).
std::optional<std::size_t> defect_nilpotency(const AlgebraElement& e);

/// Lift of an approximate idempotent: E = (1 - (1-e)^N)^N with N the defect
/// nilpotency index. P is the polynomial with 1 - (1-e)^N = P(e) e, i.e.
/// P(t) = sum_{j=1..N} (-1)^{j+1} C(N,j) t^{j-1}. The verification checks
/// E^2 = E, e^N (1-e)^N = 0, the polynomial identity as matrices, E - e
/// nilpotent, and (when e is represented with idempotent diagonal) that E
/// and e have the same realization. All guaranteed: failure throws
/// InternalError.
struct LiftReport {
    AlgebraElement input;
    std::size_t defect_index = 0;
    std::vector<Rational> poly; // P coefficients, constant term first
    Matrix lifted;              // E
    Report verification;
};
std::optional<LiftReport> lift_idempotent(const AlgebraElement& e);

/// From a partial-inverse witness Lambda (degree -1) and Lr = L^r (degree +r):
/// with e = Lr o Lambda^r and N its defect index, Lambda_r = Lambda^r o
/// e^{N-1} o P(e)^N satisfies Lr o Lambda_r = E, the lifted idempotent.
/// Nullopt when the defect of e is not nilpotent.
struct LambdaRResult {
    AlgebraElement lambda_r;
    Matrix projector; // Lr o Lambda_r (resp. Lambda_r o Lr for the mirror)
    Report verification;
};
std::optional<LambdaRResult> build_lambda_r(const AlgebraElement& lambda, const AlgebraElement& lr,
                                            std::size_t r);
/// Mirror construction with the two factors exchanged: Lambda_r o Lr is the
/// projector.
std::optional<LambdaRResult> build_lambda_r_tilde(const AlgebraElement& lambda,
                                                  const AlgebraElement& lr, std::size_t r);

/// e = g (D + n) g^{-1} with D a random 0/1 diagonal, n strictly upper
/// triangular, g unimodular: the defect e^2 - e is conjugate to a strictly
/// upper triangular matrix, hence nilpotent with index <= size.
AlgebraElement gen_nilpotent_defect(std::uint64_t seed, std::size_t size);

} // namespace primsplit
