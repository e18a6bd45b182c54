#pragma once

#include "primsplit/embedding.hpp"
#include "primsplit/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace primsplit {

/// Finite group by element list and multiplication table:
/// table[i][j] = index of g_i g_j.
struct GroupSpec {
    std::vector<std::string> elements;
    std::vector<std::vector<std::size_t>> table;

    std::size_t order() const { return elements.size(); }
    /// Index of the identity; throws if the table has none.
    std::size_t identity_index() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) = default;
};

/// Cohomological action of a finite group on a model: one shift-0 map per
/// element, multiplicative, pairing-preserving, commuting with L.
struct GroupAction {
    GroupSpec group;
    CohomologyModel model;
    std::vector<GradedMap> action; // indexed like group.elements
};

struct CharacterDatum {
    std::vector<Rational> values; // indexed like group.elements
};

/// Group-table sanity (identity, inverses, associativity) plus the action
/// laws: action(1) = id, action(g) action(h) = action(gh), each action(g)
/// preserves the pairing and commutes with L.
Report validate_action(const GroupAction& a);

/// Multiplicative with values in {+1, -1}?
bool is_sign_character(const GroupSpec& g, const CharacterDatum& chi);

/// pi_chi = (1/|G|) sum_g chi(g) action(g). For a +-1 multiplicative
/// character this is verified to be an idempotent whose image is the
/// simultaneous eigenspace V^chi = {x : g x = chi(g) x}, computed
/// independently by stacked kernels. Any other chi is accepted only if the
/// operator happens to be idempotent (a pre-made central idempotent);
/// otherwise the report carries a NotAProjector failure.
struct ChiProjector {
    GradedMap map;
    Report report;
};
ChiProjector projector_chi(const GroupAction& a, const CharacterDatum& chi);

/// Independent eigenspace oracle: basis of V^chi in each degree.
std::vector<Matrix> chi_eigenspace(const GroupAction& a, const CharacterDatum& chi);

/// Refines the fixed/variable splitting by pi_chi. Preconditions: the pair
/// of actions is intertwined by i_* and i^* (checked); chi as in
/// projector_chi. Returns (pi_fix o pi_chi, pi_var o pi_chi) and verifies
/// idempotence, mutual annihilation, commutation of pi_chi with pi_fix, and
/// that the two pieces add up to pi_chi.
struct EquivariantSplit {
    GradedMap fix_chi, var_chi;
    Report report;
};
EquivariantSplit equivariant_split(const EmbeddingModel& e, const GroupAction& sub_action,
                                   const GroupAction& ambient_action, const CharacterDatum& chi);

/// Action file payload: an action on a model, its named characters, and
/// optionally the matching ambient action for splitting refinements.
struct ActionFile {
    GroupAction sub;
    std::map<std::string, CharacterDatum> characters;
    std::optional<GroupAction> ambient;
};

/// The swap of the two rulings of the quadric in P^3, with trivial ambient
/// action and the trivial/sign characters.
ActionFile gen_quadric_ruling_swap();

} // namespace primsplit
