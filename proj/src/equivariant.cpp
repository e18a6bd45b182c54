#include "primsplit/equivariant.hpp"

#include "primsplit/generators.hpp"

#include <stdexcept>

namespace primsplit {

std::size_t GroupSpec::identity_index() const {
    const std::size_t n = order();
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
            ok = table[e][j] == j && table[j][e] == j;
        if (ok) return e;
    }
    throw std::invalid_argument("group table has no identity");
}

Report validate_action(const GroupAction& a) {
    Report rep;
    rep.subject = "group action on '" + a.model.name + "'";
    const std::size_t n = a.group.order();
    if (n == 0 || a.group.table.size() != n || a.action.size() != n) {
        rep.add("sizes consistent", false);
        return rep;
    }
    for (const auto& row : a.group.table) {
        if (row.size() != n) {
            rep.add("table square", false);
            return rep;
        }
        for (std::size_t v : row)
            if (v >= n) {
                rep.add("table entries in range", false);
                return rep;
            }
    }
    std::size_t id = 0;
    try {
        id = a.group.identity_index();
        rep.add("identity element", true, "'" + a.group.elements[id] + "'");
    } catch (const std::invalid_argument&) {
        rep.add("identity element", false);
        return rep;
    }
    bool assoc = true, inverses = true;
    for (std::size_t i = 0; i < n; ++i) {
        bool has_inv = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.group.table[i][j] == id && a.group.table[j][i] == id) has_inv = true;
            for (std::size_t k = 0; k < n; ++k)
                if (a.group.table[a.group.table[i][j]][k] != a.group.table[i][a.group.table[j][k]])
                    assoc = false;
        }
        inverses = inverses && has_inv;
    }
    rep.add("associativity", assoc);
    rep.add("inverses", inverses);

    rep.add("action(1) = id", a.action[id] == identity_map(a.model));
    bool mult = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (compose(a.action[i], a.action[j]) != a.action[a.group.table[i][j]]) mult = false;
    rep.add("action multiplicative", mult);

    const GradedMap l = lefschetz_map(a.model);
    const std::size_t top = a.model.top();
    for (std::size_t i = 0; i < n; ++i) {
        rep.add("action('" + a.group.elements[i] + "') commutes with L",
                compose(a.action[i], l) == compose(l, a.action[i]));
        bool pres = true;
        for (std::size_t k = 0; k <= top; ++k) {
            if (a.model.b(k) == 0) continue;
            const Matrix lhs = a.action[i].blocks[k].transposed() * a.model.pairing_block(k) *
                               a.action[i].blocks[top - k];
            if (lhs != a.model.pairing_block(k)) pres = false;
        }
        rep.add("action('" + a.group.elements[i] + "') preserves pairing", pres);
    }
    return rep;
}

bool is_sign_character(const GroupSpec& g, const CharacterDatum& chi) {
    const std::size_t n = g.order();
    if (chi.values.size() != n) return false;
    for (const Rational& v : chi.values)
        if (v != Rational(1) && v != Rational(-1)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (chi.values[g.table[i][j]] != chi.values[i] * chi.values[j]) return false;
    return true;
}

std::vector<Matrix> chi_eigenspace(const GroupAction& a, const CharacterDatum& chi) {
    const std::size_t top = a.model.top();
    std::vector<Matrix> out(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        const std::size_t bk = a.model.b(k);
        if (bk == 0) {
            out[k] = Matrix(0, 0);
            continue;
        }
        Matrix stacked(0, bk);
        for (std::size_t i = 0; i < a.group.order(); ++i)
            stacked = stacked.vcat(a.action[i].blocks[k] - chi.values[i] * Matrix::identity(bk));
        const auto vs = kernel_basis(stacked);
        Matrix basis(bk, vs.size());
        for (std::size_t j = 0; j < vs.size(); ++j)
            for (std::size_t i = 0; i < bk; ++i) basis.at(i, j) = vs[j][i];
        out[k] = std::move(basis);
    }
    return out;
}

ChiProjector projector_chi(const GroupAction& a, const CharacterDatum& chi) {
    ChiProjector out;
    out.report.subject = "isotypic projector on '" + a.model.name + "'";
    const std::size_t n = a.group.order();
    if (chi.values.size() != n) {
        out.report.add("character size", false);
        return out;
    }
    GradedMap acc = zero_map(a.model, a.model, 0);
    for (std::size_t i = 0; i < n; ++i)
        acc = map_add(acc, map_scale(chi.values[i], a.action[i]));
    out.map = map_scale(Rational(1, static_cast<long>(n)), acc);

    const bool sign_char = is_sign_character(a.group, chi);
    const bool idem = is_idempotent(out.map);
    if (sign_char) {
        out.report.add("character multiplicative with values +-1", true);
        out.report.add("projector idempotent", idem);
        // Image = simultaneous eigenspace, degree by degree.
        const auto eigen = chi_eigenspace(a, chi);
        for (std::size_t k = 0; k <= a.model.top(); ++k) {
            if (a.model.b(k) == 0) continue;
            const Matrix& pk = out.map.blocks[k];
            const std::size_t rk = rank(pk);
            bool ok = rk == eigen[k].cols();
            if (ok && eigen[k].cols() > 0) ok = pk * eigen[k] == eigen[k]; // fixes V^chi pointwise
            if (ok)
                for (std::size_t i = 0; i < n && ok; ++i)
                    ok = a.action[i].blocks[k] * pk == chi.values[i] * pk; // image inside V^chi
            out.report.add("Im = V^chi degree " + std::to_string(k), ok,
                           "rank " + std::to_string(rk) + " eigenspace " +
                               std::to_string(eigen[k].cols()));
        }
    } else if (idem) {
        out.report.skip("character multiplicative with values +-1",
                        "accepted as a pre-made central idempotent");
        out.report.add("projector idempotent", true);
    } else {
        out.report.add("NotAProjector", false,
                       "chi is not a +-1 multiplicative character and the averaged operator "
                       "is not idempotent");
    }
    return out;
}

EquivariantSplit equivariant_split(const EmbeddingModel& e, const GroupAction& sub_action,
                                   const GroupAction& ambient_action, const CharacterDatum& chi) {
    EquivariantSplit out;
    out.report.subject = "equivariant splitting of '" + e.sub.name + "'";
    if (sub_action.model != e.sub || ambient_action.model != e.ambient) {
        out.report.add("actions live on the embedding models", false);
        return out;
    }
    if (sub_action.group != ambient_action.group) {
        out.report.add("same group on both models", false);
        return out;
    }
    // Invariance of the embedding data under the action.
    bool invariant = true;
    for (std::size_t i = 0; i < sub_action.group.order(); ++i) {
        if (compose(ambient_action.action[i], e.pushforward) !=
            compose(e.pushforward, sub_action.action[i]))
            invariant = false;
        if (compose(e.pullback, ambient_action.action[i]) !=
            compose(sub_action.action[i], e.pullback))
            invariant = false;
    }
    out.report.add("action leaves the embedding invariant", invariant);
    if (!invariant) return out;

    ChiProjector chi_proj = projector_chi(sub_action, chi);
    out.report.merge(chi_proj.report);
    if (!chi_proj.report.passed()) return out;
    out.report.skip("note",
                    "both pi_fix.pi_chi and pi_var.pi_chi are constructed and verified as "
                    "projectors");

    const SplitResult s = split(e);
    out.fix_chi = compose(s.pi_fix, chi_proj.map);
    out.var_chi = compose(s.pi_var, chi_proj.map);

    // Both orders of pi_fix o pi_chi and pi_var o pi_chi are built; the two
    // displayed pieces use pi_fix/pi_var first.
    out.report.add("pi_chi commutes with pi_fix",
                   compose(chi_proj.map, s.pi_fix) == compose(s.pi_fix, chi_proj.map));
    out.report.add("pi_fix.pi_chi idempotent", is_idempotent(out.fix_chi));
    out.report.add("pi_var.pi_chi idempotent", is_idempotent(out.var_chi));
    out.report.add("(pi_fix.pi_chi).(pi_var.pi_chi) = 0",
                   compose(out.fix_chi, out.var_chi).is_zero());
    out.report.add("(pi_var.pi_chi).(pi_fix.pi_chi) = 0",
                   compose(out.var_chi, out.fix_chi).is_zero());
    out.report.add("pieces sum to pi_chi", map_add(out.fix_chi, out.var_chi) == chi_proj.map);
    return out;
}

ActionFile gen_quadric_ruling_swap() {
    ActionFile file;
    const EmbeddingModel e = gen_ci_embedding(2);

    GroupSpec z2;
    z2.elements = {"1", "s"};
    z2.table = {{0, 1}, {1, 0}};

    GroupAction sub;
    sub.group = z2;
    sub.model = e.sub;
    GradedMap swap = identity_map(e.sub);
    swap.blocks[2] = Matrix{{0, 1}, {1, 0}};
    sub.action = {identity_map(e.sub), swap};
    file.sub = std::move(sub);

    GroupAction amb;
    amb.group = z2;
    amb.model = e.ambient;
    amb.action = {identity_map(e.ambient), identity_map(e.ambient)};
    file.ambient = std::move(amb);

    file.characters["trivial"] = CharacterDatum{{Rational(1), Rational(1)}};
    file.characters["sign"] = CharacterDatum{{Rational(1), Rational(-1)}};
    return file;
}

} // namespace primsplit
