#include "primsplit/surface.hpp"

#include <stdexcept>

namespace primsplit {

namespace {

Rational pair2(const CohomologyModel& base, const Vec& x, const Vec& y) {
    const Matrix& p = base.pairing_block(2);
    Rational acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * p.at(i, j) * y[j];
    }
    return acc;
}

Vec sub_scaled(const Vec& a, const Rational& c, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - c * b[i];
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Integer coordinates, content 1, first nonzero entry positive.
Vec normalize_primitive(Vec v) {
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& x : v) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
        lcm_den = l;
    }
    for (auto& x : v) x *= Rational(lcm_den, mpz_class(1));
    for (const auto& x : v) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), x.numerator().get_mpz_t());
        gcd_num = g;
    }
    if (gcd_num != 0)
        for (auto& x : v) x /= Rational(gcd_num, mpz_class(1));
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        if (x.sign() < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

Matrix gram_matrix(const CohomologyModel& base, const std::vector<Vec>& classes) {
    Matrix g(classes.size(), classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j) g.at(i, j) = pair2(base, classes[i], classes[j]);
    return g;
}

std::vector<Vec> orthogonalize(const CohomologyModel& base, std::vector<Vec> v) {
    if (v.empty()) return v;
    if (rank(gram_matrix(base, v)) != v.size())
        throw DegenerateFormError("Gram matrix of the algebraic classes is singular");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        // project v[i] (and implicitly the rest) away from the vectors found so far
        Vec w = v[i];
        for (const Vec& u : out) w = sub_scaled(w, pair2(base, u, w) / pair2(base, u, u), u);
        if (pair2(base, w, w).is_zero()) {
            // isotropic: swap in, or mix with, a later projected vector
            bool fixed = false;
            for (std::size_t m = i + 1; m < v.size() && !fixed; ++m) {
                Vec u = v[m];
                for (const Vec& o : out) u = sub_scaled(u, pair2(base, o, u) / pair2(base, o, o), o);
                if (!pair2(base, u, u).is_zero()) {
                    std::swap(v[i], v[m]);
                    w = u;
                    fixed = true;
                    break;
                }
                // both isotropic: w + c u works for the smallest positive c
                // with 2c<w,u> + c^2<u,u> nonzero; c = 1 whenever <w,u> != 0
                const Rational cross = pair2(base, w, u) + pair2(base, u, w);
                if (!cross.is_zero()) {
                    for (long c = 1; c <= 2; ++c) {
                        Vec cand = sub_scaled(w, Rational(-c), u); // w + c u
                        if (!pair2(base, cand, cand).is_zero()) {
                            w = cand;
                            fixed = true;
                            break;
                        }
                    }
                }
            }
            if (!fixed)
                throw DegenerateFormError("isotropic vector orthogonal to the remaining span");
        }
        out.push_back(normalize_primitive(w));
    }
    return out;
}

GradedMap degree_projector(const CohomologyModel& m, std::size_t degree) {
    GradedMap p = zero_map(m, m, 0);
    p.blocks[degree] = Matrix::identity(m.b(degree));
    return p;
}

bool self_adjoint2(const CohomologyModel& base, const Matrix& op) {
    const Matrix& p = base.pairing_block(2);
    return op.transposed() * p == p * op;
}

void verify_pieces(Report& rep, const CohomologyModel& base, const std::vector<const GradedMap*>& pieces,
                   const std::vector<std::string>& names) {
    GradedMap sum = zero_map(base, base, 0);
    for (const GradedMap* p : pieces) sum = map_add(sum, *p);
    rep.add("pieces sum to id", sum == identity_map(base));
    bool products_ok = true;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        rep.add(names[i] + " idempotent", is_idempotent(*pieces[i]));
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (i == j) continue;
            if (!compose(*pieces[i], *pieces[j]).is_zero()) {
                products_ok = false;
                rep.add(names[i] + "." + names[j] + " = 0", false);
            }
        }
    }
    rep.add("pairwise products vanish", products_ok);
}

} // namespace

std::vector<Vec> orthogonalize_classes(const SurfaceModel& s) {
    if (s.base.dim != 2) throw std::invalid_argument("orthogonalize_classes: not a surface model");
    for (const Vec& c : s.algebraic_classes)
        if (c.size() != s.base.b(2))
            throw std::invalid_argument("orthogonalize_classes: class coordinate size mismatch");
    return orthogonalize(s.base, s.algebraic_classes);
}

Matrix algebraic_projector(const CohomologyModel& base, const std::vector<Vec>& classes) {
    const std::size_t b2 = base.b(2);
    SurfaceModel tmp{base, classes};
    const std::vector<Vec> ortho = orthogonalize_classes(tmp);
    Matrix proj(b2, b2);
    const Matrix& p2 = base.pairing_block(2);
    for (const Vec& d : ortho) {
        const Rational q = pair2(base, d, d);
        // x -> (<x, d>/q) d contributes d * (P2^T d)^T / q ... entrywise:
        // proj[a][b] += d[a] * (sum_c P2[b][c] d[c]) / q with <x,d> = x^T P2 d.
        Vec pd(b2);
        for (std::size_t b = 0; b < b2; ++b) {
            Rational acc;
            for (std::size_t c = 0; c < b2; ++c) acc += p2.at(b, c) * d[c];
            pd[b] = acc;
        }
        for (std::size_t a = 0; a < b2; ++a)
            for (std::size_t b = 0; b < b2; ++b) proj.at(a, b) += d[a] * pd[b] / q;
    }
    return proj;
}

ChowLefschetzPieces chow_lefschetz(const SurfaceModel& s) {
    if (s.base.dim != 2) throw std::invalid_argument("chow_lefschetz: not a surface model");
    ChowLefschetzPieces out;
    out.report.subject = "Chow-Lefschetz pieces of '" + s.base.name + "'";
    out.pi0 = degree_projector(s.base, 0);
    out.pi1 = degree_projector(s.base, 1);
    out.pi3 = degree_projector(s.base, 3);
    out.pi4 = degree_projector(s.base, 4);

    const Matrix alg = algebraic_projector(s.base, s.algebraic_classes);
    out.pi2_alg = zero_map(s.base, s.base, 0);
    out.pi2_alg.blocks[2] = alg;
    out.pi2_tr = map_sub(degree_projector(s.base, 2), out.pi2_alg);

    verify_pieces(out.report, s.base,
                  {&out.pi0, &out.pi1, &out.pi2_alg, &out.pi2_tr, &out.pi3, &out.pi4},
                  {"pi0", "pi1", "pi2_alg", "pi2_tr", "pi3", "pi4"});
    out.report.add("pi2_alg self-adjoint", self_adjoint2(s.base, out.pi2_alg.blocks[2]));
    out.report.add("pi2_tr self-adjoint", self_adjoint2(s.base, out.pi2_tr.blocks[2]));
    return out;
}

std::pair<Vec, Vec> split_class(const SplitResult& s, const Vec& cls) {
    return {s.pi_fix.blocks[2].apply(cls), s.pi_var.blocks[2].apply(cls)};
}

ChowLefschetzPieces refine_with_splitting(const SurfaceModel& s, const EmbeddingModel& e,
                                          bool auto_split) {
    if (s.base != e.sub)
        throw std::invalid_argument("refine_with_splitting: surface model is not the embedded surface");
    const SplitResult sp = split(e);

    // The variable projector of an embedded surface must live in degree 2 only.
    for (std::size_t k = 0; k <= e.sub.top(); ++k)
        if (k != 2 && !sp.pi_var.blocks[k].is_zero())
            throw InternalError("variable projector not concentrated in degree 2");

    const Matrix& pull2 = e.pullback.blocks[2];
    const Matrix& push2 = e.pushforward.blocks[2];
    std::vector<Vec> fixed_classes, variable_classes;
    for (const Vec& c : s.algebraic_classes) {
        const bool in_fixed = solve(pull2, c).has_value();
        const bool in_variable = vec_is_zero(push2.apply(c));
        if (in_fixed) {
            fixed_classes.push_back(c);
        } else if (in_variable) {
            variable_classes.push_back(c);
        } else if (auto_split) {
            auto [cf, cv] = split_class(sp, c);
            if (!vec_is_zero(cf)) fixed_classes.push_back(normalize_primitive(cf));
            if (!vec_is_zero(cv)) variable_classes.push_back(normalize_primitive(cv));
        } else {
            throw ClassNotSplitError(
                "algebraic class lies in neither Im i^* nor Ker i_*; split it into its fixed and "
                "variable components first");
        }
    }
    // Components produced by auto-splitting may repeat; drop dependent ones.
    auto prune = [&](std::vector<Vec>& cls) {
        std::vector<Vec> kept;
        Matrix acc(s.base.b(2), 0);
        for (const Vec& c : cls) {
            const Matrix cand = acc.hcat(Matrix::column(c));
            if (rank(cand) > rank(acc)) {
                kept.push_back(c);
                acc = cand;
            }
        }
        cls = std::move(kept);
    };
    prune(fixed_classes);
    prune(variable_classes);

    ChowLefschetzPieces out = chow_lefschetz(SurfaceModel{
        s.base, [&] {
            std::vector<Vec> all = fixed_classes;
            all.insert(all.end(), variable_classes.begin(), variable_classes.end());
            return all;
        }()});
    out.report.subject = "refined Chow-Lefschetz pieces of '" + s.base.name + "'";

    GradedMap alg_fix = zero_map(s.base, s.base, 0);
    alg_fix.blocks[2] = algebraic_projector(s.base, fixed_classes);
    GradedMap alg_var = zero_map(s.base, s.base, 0);
    alg_var.blocks[2] = algebraic_projector(s.base, variable_classes);
    GradedMap tr_var = map_sub(sp.pi_var, alg_var);
    GradedMap tr_fix = map_sub(out.pi2_tr, tr_var);

    Report& rep = out.report;
    rep.add("pi2_alg splits as fix + var", map_add(alg_fix, alg_var) == out.pi2_alg);
    verify_pieces(rep, s.base,
                  {&out.pi0, &out.pi1, &alg_fix, &alg_var, &tr_fix, &tr_var, &out.pi3, &out.pi4},
                  {"pi0", "pi1", "pi2_alg_fix", "pi2_alg_var", "pi2_tr_fix", "pi2_tr_var", "pi3",
                   "pi4"});
    rep.add("pi2_alg_fix self-adjoint", self_adjoint2(s.base, alg_fix.blocks[2]));
    rep.add("pi2_alg_var self-adjoint", self_adjoint2(s.base, alg_var.blocks[2]));
    rep.add("pi2_tr_fix self-adjoint", self_adjoint2(s.base, tr_fix.blocks[2]));
    rep.add("pi2_tr_var self-adjoint", self_adjoint2(s.base, tr_var.blocks[2]));

    out.pi2_alg_fix = std::move(alg_fix);
    out.pi2_alg_var = std::move(alg_var);
    out.pi2_tr_fix = std::move(tr_fix);
    out.pi2_tr_var = std::move(tr_var);
    return out;
}

} // namespace primsplit
