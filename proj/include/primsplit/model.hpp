#pragma once

#include "primsplit/matrix.hpp"
#include "primsplit/report.hpp"

#include <string>
#include <vector>

namespace primsplit {

/// Graded Q-vector space modelling the rational cohomology of a smooth
/// projective n-fold: Betti numbers b_0..b_{2n}, a perfect pairing of each
/// degree k against degree 2n-k, and the Lefschetz operator L (cup with the
/// hyperplane class) raising degree by 2.
///
/// Degrees are stored naturally as 0..2n; the centered degree is k - n.
struct CohomologyModel {
    std::string name;
    std::size_t dim = 0;                  // n
    std::vector<std::size_t> betti;       // length 2n+1
    std::vector<Matrix> pairing;          // index k: b_k x b_{2n-k}
    std::vector<Matrix> lefschetz;        // index k (k <= 2n-2): b_{k+2} x b_k

    std::size_t top() const { return 2 * dim; }
    std::size_t b(std::size_t k) const { return k < betti.size() ? betti[k] : 0; }
    std::size_t total_dim() const;

    /// Lefschetz block out of degree k; zero-shaped when out of range.
    Matrix lefschetz_block(std::size_t k) const;
    const Matrix& pairing_block(std::size_t k) const;

    /// Composite L^j : H^k -> H^{k+2j}; a 0 x b_k matrix once the target
    /// degree leaves 0..2n.
    Matrix lefschetz_power(std::size_t k, std::size_t j) const;

    friend bool operator==(const CohomologyModel& a, const CohomologyModel& b) = default;
};

/// Degree-shifting linear map between graded models. blocks[k] maps source
/// degree k to target degree k + shift; blocks with an out-of-range target
/// are stored zero-shaped. The target Betti numbers ride along so that
/// compositions passing through the zero space come back with the right
/// (zero) block shapes.
struct GradedMap {
    int shift = 0;
    std::vector<std::size_t> target_betti;
    std::vector<Matrix> blocks; // indexed by source degree 0..source_top

    const Matrix& block(std::size_t k) const { return blocks[k]; }
    bool is_zero() const;
    std::size_t target_b(long degree) const {
        return (degree >= 0 && degree < static_cast<long>(target_betti.size()))
                   ? target_betti[static_cast<std::size_t>(degree)]
                   : 0;
    }

    friend bool operator==(const GradedMap& a, const GradedMap& b) = default;
};

GradedMap identity_map(const CohomologyModel& m);
GradedMap zero_map(const CohomologyModel& source, const CohomologyModel& target, int shift);

/// g after f. Degrees where either factor leaves the grading produce
/// zero-shaped or zero blocks, as appropriate.
GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap map_add(const GradedMap& a, const GradedMap& b);
GradedMap map_sub(const GradedMap& a, const GradedMap& b);
GradedMap map_scale(const Rational& s, const GradedMap& a);

bool is_idempotent(const GradedMap& p);
std::size_t map_rank(const GradedMap& p, std::size_t degree);

/// L as a GradedMap of shift +2 over the model's own grading.
GradedMap lefschetz_map(const CohomologyModel& m);

/// Composite lambda^j as a shift -2j map (lambda given as a shift -2 map).
GradedMap map_power_shifted(const GradedMap& f, std::size_t j, const CohomologyModel& m);

/// Structural invariants: Betti symmetry, b_0 = b_{2n} = 1, block shapes,
/// perfect pairings, self-adjointness of L. Failures are listed per degree.
Report validate_model(const CohomologyModel& m);

/// For j = 0..n checks that L^j : H^{n-j} -> H^{n+j} is an isomorphism,
/// recording rank against the expected Betti number.
Report verify_hard_lefschetz(const CohomologyModel& m);

} // namespace primsplit
