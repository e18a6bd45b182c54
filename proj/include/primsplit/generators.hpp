#pragma once

#include "primsplit/embedding.hpp"
#include "primsplit/model.hpp"

#include <cstdint>
#include <vector>

namespace primsplit {

/// H^*(P^n): Betti number 1 in every even degree, all pairings and Lefschetz
/// maps the 1x1 identity.
CohomologyModel gen_projective_space(std::size_t n);

/// Same spaces with every intersection number scaled; used by the embedding
/// generator, which records the scale in the model name.
CohomologyModel gen_projective_space_scaled(std::size_t n, const Rational& pairing_scale);

/// H^*(P^1 x P^1): Betti (1,0,2,0,1), degree-2 form [[0,1],[1,0]] on the two
/// rulings, L = cup with h_1 + h_2.
CohomologyModel gen_product_p1p1();

/// Direct sum of Lefschetz strings with the per-string hyperbolic pairing,
/// conjugated by a seeded unimodular change of basis in every degree.
/// `lengths` is a multiset of odd string lengths with a unique maximum (the
/// maximal string supplies b_0 = b_top = 1); rejects anything else.
/// The recorded primitive ranks (string bottoms per degree) are the oracle
/// the decomposition is tested against.
struct JordanModel {
    CohomologyModel model;
    std::vector<std::size_t> primitive_rank; // per degree
};
JordanModel gen_jordan_strings(std::uint64_t seed, const std::vector<std::size_t>& lengths);

/// Deterministic profile for a given seed with total dimension <= max_total.
std::vector<std::size_t> jordan_profile_from_seed(std::uint64_t seed, std::size_t max_total);

/// Degree-d surface in P^3: b_2 = d^3 - 4d^2 + 6d - 2. For d = 2 the degree-2
/// basis is the two rulings with form [[0,1],[1,0]] and h = e + f; otherwise
/// the basis is h with h.h = d plus an orthogonal complement with form -1.
CohomologyModel gen_hypersurface_p3(std::size_t d);

/// Degree-d hypersurface embedded in P^3 (codimension 1). The ambient pairing
/// carries an overall factor d so that restriction, pushforward, adjunction
/// and the composition laws all hold with every constant equal to 1; the sub
/// model is exactly gen_hypersurface_p3(d). Rejects d < 2.
EmbeddingModel gen_ci_embedding(std::size_t d);

} // namespace primsplit
