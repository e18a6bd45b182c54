#include "primsplit/embedding.hpp"

#include "primsplit/randmat.hpp"

#include <stdexcept>

namespace primsplit {

namespace {

Matrix basis_of_image(const Matrix& m) {
    const Echelon ech = reduced_row_echelon(m);
    Matrix b(m.rows(), ech.pivot_cols.size());
    for (std::size_t j = 0; j < ech.pivot_cols.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) b.at(i, j) = m.at(i, ech.pivot_cols[j]);
    return b;
}

Matrix basis_of_kernel(const Matrix& m) {
    const auto vs = kernel_basis(m);
    Matrix b(m.cols(), vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) b.at(i, j) = vs[j][i];
    return b;
}

bool same_column_span(const Matrix& a, const Matrix& b) {
    const std::size_t ra = rank(a), rb = rank(b);
    return ra == rb && rank_of_columns(a, b) == ra;
}

void rep_image_check(Report& rep, std::size_t degree, const std::string& what, const Matrix& proj,
                     const Matrix& expected) {
    const bool ok = same_column_span(basis_of_image(proj), expected);
    rep.add(what + " degree " + std::to_string(degree), ok,
            "rank " + std::to_string(rank(proj)) + " vs " + std::to_string(expected.cols()));
}

} // namespace

Report validate_embedding(const EmbeddingModel& e) {
    Report rep;
    rep.subject = "validate embedding '" + e.sub.name + "' in '" + e.ambient.name + "'";
    const std::size_t r = e.codim;
    if (r < 1) {
        rep.add("codim >= 1", false, "codim = " + std::to_string(r));
        return rep;
    }
    if (e.ambient.dim != e.sub.dim + r) {
        rep.add("dim ambient = dim sub + codim", false);
        return rep;
    }
    const std::size_t d = e.sub.dim;
    const std::size_t mtop = e.ambient.top(), xtop = e.sub.top();

    if (e.pullback.shift != 0 || e.pullback.blocks.size() != mtop + 1) {
        rep.add("pullback shape", false, "expected shift 0 with one block per ambient degree");
        return rep;
    }
    if (e.pushforward.shift != static_cast<int>(2 * r) || e.pushforward.blocks.size() != xtop + 1) {
        rep.add("pushforward shape", false, "expected shift +2r with one block per sub degree");
        return rep;
    }
    for (std::size_t k = 0; k <= mtop; ++k) {
        const Matrix& blk = e.pullback.blocks[k];
        if (blk.rows() != e.sub.b(k) || blk.cols() != e.ambient.b(k)) {
            rep.add("pullback block degree " + std::to_string(k), false, "shape mismatch");
            return rep;
        }
    }
    for (std::size_t k = 0; k <= xtop; ++k) {
        const Matrix& blk = e.pushforward.blocks[k];
        if (blk.rows() != e.ambient.b(k + 2 * r) || blk.cols() != e.sub.b(k)) {
            rep.add("pushforward block degree " + std::to_string(k), false, "shape mismatch");
            return rep;
        }
    }

    // i_* i^* = L_M^r on every ambient degree.
    for (std::size_t k = 0; k <= mtop; ++k) {
        if (e.ambient.b(k) == 0) continue;
        const long tk = static_cast<long>(k) + 2 * static_cast<long>(r);
        Matrix lhs;
        if (tk > static_cast<long>(mtop) || e.sub.b(k) == 0)
            lhs = Matrix(tk > static_cast<long>(mtop) ? 0 : e.ambient.b(tk), e.ambient.b(k));
        else
            lhs = e.pushforward.blocks[k] * e.pullback.blocks[k];
        const Matrix rhs = e.ambient.lefschetz_power(k, r);
        rep.add("i_* i^* = L^r degree " + std::to_string(k),
                lhs.rows() == rhs.rows() && lhs == rhs);
    }
    // i^* i_* = L_X^r on every sub degree.
    for (std::size_t k = 0; k <= xtop; ++k) {
        if (e.sub.b(k) == 0) continue;
        const std::size_t tk = k + 2 * r;
        Matrix lhs;
        if (tk > mtop)
            lhs = Matrix(0, e.sub.b(k));
        else
            lhs = e.pullback.blocks[tk] * e.pushforward.blocks[k];
        Matrix rhs = e.sub.lefschetz_power(k, r);
        if (lhs.rows() != rhs.rows()) {
            // target degree exists on M but not on X: L_X^r is the zero map there
            rep.add("i^* i_* = L^r degree " + std::to_string(k), lhs.is_zero() && rhs.is_zero());
        } else {
            rep.add("i^* i_* = L^r degree " + std::to_string(k), lhs == rhs);
        }
    }
    // i^* L_M = L_X i^*.
    for (std::size_t k = 0; k + 2 <= mtop; ++k) {
        if (e.ambient.b(k) == 0) continue;
        const Matrix lhs = e.pullback.blocks[k + 2] * e.ambient.lefschetz_block(k);
        const Matrix rhs_blk = e.sub.lefschetz_block(k) * e.pullback.blocks[k];
        const bool ok = (lhs.rows() == rhs_blk.rows()) ? lhs == rhs_blk
                                                       : (lhs.is_zero() && rhs_blk.is_zero());
        rep.add("i^* L = L i^* degree " + std::to_string(k), ok);
    }
    // Adjunction <i_* x, m>_M = <x, i^* m>_X for x in H^k(X), m in H^{2(d+r)-k-2r}(M):
    // (i_*)_k^T P^M_{k+2r} = P^X_k (i^*)_{2d-k}.
    for (std::size_t k = 0; k <= xtop; ++k) {
        if (e.sub.b(k) == 0) continue;
        const std::size_t km = k + 2 * r;       // degree of i_* x in M
        const std::size_t kc = 2 * d - k;       // complementary degree on X (= 2(d+r) - km on M)
        if (km > mtop) continue;
        const Matrix lhs = e.pushforward.blocks[k].transposed() * e.ambient.pairing_block(km);
        const Matrix rhs = e.sub.pairing_block(k) * e.pullback.blocks[kc];
        rep.add("adjunction degree " + std::to_string(k), lhs == rhs);
    }
    // Hyperplane-section shape: i^* iso for k < d, i_* iso for k > d.
    for (std::size_t k = 0; k < d; ++k) {
        if (e.ambient.b(k) == 0 && e.sub.b(k) == 0) continue;
        const Matrix& blk = e.pullback.blocks[k];
        rep.add("i^* iso degree " + std::to_string(k),
                e.ambient.b(k) == e.sub.b(k) && rank(blk) == e.sub.b(k));
    }
    for (std::size_t k = d + 1; k <= xtop; ++k) {
        if (e.sub.b(k) == 0 && e.ambient.b(k + 2 * r) == 0) continue;
        const Matrix& blk = e.pushforward.blocks[k];
        rep.add("i_* iso degree " + std::to_string(k),
                e.sub.b(k) == e.ambient.b(k + 2 * r) && rank(blk) == e.sub.b(k));
    }
    return rep;
}

PrProjector build_p_r(const EmbeddingModel& e) {
    PrProjector out;
    out.report.subject = "p_r on '" + e.ambient.name + "'";
    const GradedMap lambda = build_lambda(e.ambient);
    const GradedMap l = lefschetz_map(e.ambient);
    const GradedMap lr = map_power_shifted(l, e.codim, e.ambient);
    const GradedMap lam_r = map_power_shifted(lambda, e.codim, e.ambient);
    out.map = compose(lr, lam_r);
    const bool idem = is_idempotent(out.map);
    out.report.add("p_r idempotent", idem);
    out.report.add("p_r^3 = p_r", compose(out.map, compose(out.map, out.map)) == out.map);
    if (!out.report.passed()) throw InternalError("p_r failed idempotence on a validated embedding");
    return out;
}

SplitResult split(const EmbeddingModel& e) {
    SplitResult out;
    out.report.subject = "fixed/variable splitting of '" + e.sub.name + "'";
    out.report.skip("degree convention",
                    "the splitting is computed in every degree; away from the middle it is "
                    "forced trivial and serves as a regression check");
    const GradedMap lambda_m = build_lambda(e.ambient);
    const GradedMap lam_r = map_power_shifted(lambda_m, e.codim, e.ambient);
    out.pi_fix = compose(e.pullback, compose(lam_r, e.pushforward));
    out.pi_var = map_sub(identity_map(e.sub), out.pi_fix);

    out.report.add("pi_fix idempotent", is_idempotent(out.pi_fix));
    out.report.add("pi_var idempotent", is_idempotent(out.pi_var));
    out.report.add("pi_fix + pi_var = id", map_add(out.pi_fix, out.pi_var) == identity_map(e.sub));
    out.report.add("pi_fix.pi_var = 0", compose(out.pi_fix, out.pi_var).is_zero());
    out.report.add("pi_var.pi_fix = 0", compose(out.pi_var, out.pi_fix).is_zero());

    // The projector argument, step by step: with p_r = L^r lambda^r,
    // i^* lambda^r p_r i_* equals pi_fix, and squaring routes through
    // p_r^3 = p_r.
    {
        const GradedMap l = lefschetz_map(e.ambient);
        const GradedMap lr = map_power_shifted(l, e.codim, e.ambient);
        const GradedMap p_r = compose(lr, lam_r);
        const GradedMap chain = compose(e.pullback, compose(lam_r, compose(p_r, e.pushforward)));
        out.report.add("i^*.lambda^r.p_r.i_* = pi_fix", chain == out.pi_fix);
        const GradedMap p3 = compose(p_r, compose(p_r, p_r));
        out.report.add("squared chain collapses via p_r^3 = p_r",
                       compose(e.pullback, compose(lam_r, compose(p3, e.pushforward))) == chain);
    }

    const std::size_t xtop = e.sub.top();
    out.fixed_basis.resize(xtop + 1);
    out.variable_basis.resize(xtop + 1);
    out.dims.resize(xtop + 1);
    for (std::size_t k = 0; k <= xtop; ++k) {
        const Matrix& pf = out.pi_fix.blocks[k];
        const Matrix& pv = out.pi_var.blocks[k];
        out.fixed_basis[k] = basis_of_image(pf);
        out.variable_basis[k] = basis_of_image(pv);
        out.dims[k] = {out.fixed_basis[k].cols(), out.variable_basis[k].cols()};
        if (e.sub.b(k) == 0) continue;

        // Im pi_fix = Im i^* (the restriction image) in this degree.
        const Matrix im_pull = basis_of_image(e.pullback.blocks[k]);
        rep_image_check(out.report, k, "Im pi_fix = Im i^*", pf, im_pull);
        // Im pi_var = Ker i_* in this degree.
        const Matrix ker_push = basis_of_kernel(e.pushforward.blocks[k]);
        rep_image_check(out.report, k, "Im pi_var = Ker i_*", pv, ker_push);
        out.report.add("rank split degree " + std::to_string(k),
                       out.dims[k].first + out.dims[k].second == e.sub.b(k));
        if (k < e.sub.dim)
            out.report.add("pi_var = 0 below middle, degree " + std::to_string(k), pv.is_zero());
    }
    if (!out.report.passed())
        throw InternalError("splitting verification failed on a validated embedding: " +
                            out.report.first_failure());
    return out;
}

Report verify_pr_pushforward(const EmbeddingModel& e) {
    Report rep;
    rep.subject = "p_r o i_* = i_* for '" + e.sub.name + "'";
    const GradedMap pr = build_p_r(e).map;
    const GradedMap lhs = compose(pr, e.pushforward);
    const std::size_t d = e.sub.dim;
    for (std::size_t k = 0; k <= e.sub.top(); ++k) {
        if (e.sub.b(k) == 0) continue;
        const bool ok = lhs.blocks[k] == e.pushforward.blocks[k];
        if (k == d)
            rep.add("middle degree " + std::to_string(k), ok);
        else
            rep.add("degree " + std::to_string(k), ok);
    }
    return rep;
}

Report verify_orthogonality(const EmbeddingModel& e, const SplitResult& s) {
    Report rep;
    rep.subject = "fixed/variable orthogonality for '" + e.sub.name + "'";
    const std::size_t xtop = e.sub.top();
    for (std::size_t k = 0; k <= xtop; ++k) {
        const Matrix& fixed = s.fixed_basis[k];
        const Matrix& variable = s.variable_basis[xtop - k];
        if (fixed.cols() == 0 || variable.cols() == 0) {
            rep.add("degree " + std::to_string(k) + " vs " + std::to_string(xtop - k) + " (vacuous)", true);
            continue;
        }
        const Matrix g = fixed.transposed() * e.sub.pairing_block(k) * variable;
        rep.add("degree " + std::to_string(k) + " vs " + std::to_string(xtop - k), g.is_zero());
    }
    return rep;
}

Report check_module_realization(const EmbeddingModel& e, const ModuleRealization& real) {
    Report rep;
    rep.subject = "module realization check against '" + e.sub.name + "' in '" + e.ambient.name + "'";
    const Matrix& push = real.push;
    const Matrix& pull = real.pull;
    const Matrix& lam = real.lambda_action;
    const std::size_t nx = push.cols(), nm = push.rows();
    if (pull.rows() != nx || pull.cols() != nm || lam.rows() != nm || lam.cols() != nm) {
        rep.add("shapes consistent", false);
        return rep;
    }

    const Matrix lr = push * pull;       // plays L^r on C(M)
    const Matrix p = lr * lam;           // plays p_r
    const bool idem = p * p == p;
    rep.add("precondition: p idempotent", idem);
    const bool partial_inverse = p * lr == lr;
    rep.add("precondition: p identity on Im(push.pull)", partial_inverse,
            "lambda action must invert L^r on its image");
    if (!idem || !partial_inverse) return rep;

    // Statement 1: Im(id - pull.lam.p.push) = Ker(p.push).
    const Matrix q = pull * (lam * (p * push)); // the fixed projector on C(X)
    const Matrix var_proj = Matrix::identity(nx) - q;
    const Matrix a = p * push;
    const Matrix ker = basis_of_kernel(a);
    const bool contained = (a * var_proj).is_zero();
    const std::size_t rv = rank(var_proj);
    rep.add("statement 1: Im(id - pull.lam.p.push) inside Ker(p.push)", contained);
    rep.add("statement 1: ranks agree", rv == ker.cols(),
            "rank " + std::to_string(rv) + " vs kernel dim " + std::to_string(ker.cols()));

    // Statement 2: the fixed part is hit by pull.
    rep.add("statement 2: q idempotent", q * q == q);
    rep.add("statement 2: Im q inside Im pull", columns_contained_in(q, pull),
            "rank q = " + std::to_string(rank(q)) + ", rank pull = " + std::to_string(rank(pull)));
    rep.add("statement 2: q o pull onto Im q", rank(q * pull) == rank(q));
    return rep;
}

ModuleRealization self_realization(const EmbeddingModel& e) {
    const std::size_t r = e.codim;
    const std::size_t nx = e.sub.total_dim(), nm = e.ambient.total_dim();
    std::vector<std::size_t> offx(e.sub.top() + 2, 0), offm(e.ambient.top() + 2, 0);
    for (std::size_t k = 0; k <= e.sub.top(); ++k) offx[k + 1] = offx[k] + e.sub.b(k);
    for (std::size_t k = 0; k <= e.ambient.top(); ++k) offm[k + 1] = offm[k] + e.ambient.b(k);

    auto place = [](Matrix& big, const Matrix& blk, std::size_t row0, std::size_t col0) {
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j) big.at(row0 + i, col0 + j) = blk.at(i, j);
    };

    ModuleRealization real;
    real.push = Matrix(nm, nx);
    for (std::size_t k = 0; k <= e.sub.top(); ++k)
        if (k + 2 * r <= e.ambient.top())
            place(real.push, e.pushforward.blocks[k], offm[k + 2 * r], offx[k]);
    real.pull = Matrix(nx, nm);
    for (std::size_t k = 0; k <= e.ambient.top(); ++k)
        if (k <= e.sub.top())
            place(real.pull, e.pullback.blocks[k], offx[k], offm[k]);

    const GradedMap lambda_m = build_lambda(e.ambient);
    const GradedMap lam_r = map_power_shifted(lambda_m, r, e.ambient);
    real.lambda_action = Matrix(nm, nm);
    for (std::size_t k = 0; k <= e.ambient.top(); ++k)
        if (k >= 2 * r) place(real.lambda_action, lam_r.blocks[k], offm[k - 2 * r], offm[k]);
    return real;
}

ModuleRealization conjugate_realization(const ModuleRealization& real, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t nx = real.push.cols(), nm = real.push.rows();
    const Matrix s = random_unimodular(rng, nx);
    const Matrix t = random_unimodular(rng, nm);
    const Matrix s_inv = *inverse(s);
    const Matrix t_inv = *inverse(t);
    ModuleRealization out;
    out.push = t * real.push * s_inv;
    out.pull = s * real.pull * t_inv;
    out.lambda_action = t * real.lambda_action * t_inv;
    return out;
}

} // namespace primsplit
