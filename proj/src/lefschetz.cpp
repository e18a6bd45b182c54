#include "primsplit/lefschetz.hpp"

namespace primsplit {

namespace {

Matrix basis_from_kernel(const Matrix& m) {
    const auto vs = kernel_basis(m);
    Matrix b(m.cols(), vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) b.at(i, j) = vs[j][i];
    return b;
}

struct StringData {
    std::vector<Matrix> primitive_basis;            // per degree
    std::vector<std::size_t> primitive_rank;        // per degree
    std::vector<std::vector<StringSummand>> summands; // per degree
    std::vector<Matrix> degree_basis;               // per degree: all summand columns side by side
};

StringData build_strings(const CohomologyModel& m) {
    const std::size_t n = m.dim, top = m.top();
    StringData s;
    s.primitive_basis.assign(top + 1, Matrix());
    s.primitive_rank.assign(top + 1, 0);
    s.summands.resize(top + 1);
    s.degree_basis.assign(top + 1, Matrix());

    // P^k = Ker(L^{j+1}: H^k -> H^{k+2j+2}) with j = n-k, for k <= n.
    for (std::size_t k = 0; k <= n; ++k) {
        if (m.b(k) == 0) {
            s.primitive_basis[k] = Matrix(0, 0);
            continue;
        }
        const std::size_t j = n - k;
        s.primitive_basis[k] = basis_from_kernel(m.lefschetz_power(k, j + 1));
        s.primitive_rank[k] = s.primitive_basis[k].cols();
    }

    for (std::size_t k = 0; k <= top; ++k) {
        if (m.b(k) == 0) continue;
        Matrix all(m.b(k), 0);
        // Summand L^m P^{k-2m} survives at degree k iff the string of level
        // n-(k-2m) reaches it, i.e. m >= k-n.
        for (std::size_t mpow = (k > n ? k - n : 0); 2 * mpow <= k; ++mpow) {
            const std::size_t src = k - 2 * mpow;
            if (src > n || s.primitive_rank[src] == 0) continue;
            StringSummand sm;
            sm.power = mpow;
            sm.primitive_degree = src;
            sm.basis = m.lefschetz_power(src, mpow) * s.primitive_basis[src];
            all = all.hcat(sm.basis);
            s.summands[k].push_back(std::move(sm));
        }
        s.degree_basis[k] = std::move(all);
    }
    return s;
}

} // namespace

LefschetzAnalysis analyze_lefschetz(const CohomologyModel& m) {
    const std::size_t top = m.top();
    StringData strings = build_strings(m);

    LefschetzAnalysis out;
    out.report.subject = "Lefschetz pipeline for '" + m.name + "'";
    out.report.skip("lambda convention",
                    "canonical string-basis partial inverse: lambda(L^m p) = L^{m-1} p, "
                    "lambda = 0 on primitives");

    // Exhaustion: the string vectors must form a basis of each degree.
    for (std::size_t k = 0; k <= top; ++k) {
        const Matrix& bk = strings.degree_basis[k];
        if (bk.cols() != m.b(k) || (m.b(k) > 0 && rank(bk) != m.b(k)))
            throw InternalError("string decomposition does not exhaust degree " + std::to_string(k) +
                                " of '" + m.name + "'");
    }

    // lambda on the string basis of H^k: L^m p -> L^{m-1} p, primitives -> 0.
    // In the model basis: lambda_k = C_k * B_k^{-1} with B_k the string
    // columns and C_k their images one rung down.
    GradedMap lambda;
    lambda.shift = -2;
    lambda.target_betti = m.betti;
    lambda.blocks.reserve(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        const std::size_t rows_below = k >= 2 ? m.b(k - 2) : 0;
        if (m.b(k) == 0 || rows_below == 0) {
            lambda.blocks.emplace_back(rows_below, m.b(k));
            continue;
        }
        Matrix images(rows_below, 0);
        for (const StringSummand& sm : strings.summands[k]) {
            if (sm.power == 0) {
                images = images.hcat(Matrix(rows_below, sm.basis.cols()));
            } else {
                images = images.hcat(m.lefschetz_power(sm.primitive_degree, sm.power - 1) *
                                     strings.primitive_basis[sm.primitive_degree]);
            }
        }
        // lambda_k B_k = C_k  <=>  B_k^T lambda_k^T = C_k^T
        auto lt = solve_matrix(strings.degree_basis[k].transposed(), images.transposed());
        if (!lt) throw InternalError("string basis singular in degree " + std::to_string(k));
        lambda.blocks.push_back(lt->transposed());
    }
    out.lambda = std::move(lambda);

    out.report.merge(verify_lambda_identities(m, out.lambda));

    // Primitive projector pi = id - L o lambda.
    const GradedMap l = lefschetz_map(m);
    GradedMap pr = map_sub(identity_map(m), compose(l, out.lambda));
    {
        Report& rep = out.report;
        rep.add("primitive projector idempotent", is_idempotent(pr));
        const GradedMap ll = compose(l, out.lambda);
        rep.add("L.lambda idempotent", is_idempotent(ll));
        rep.add("(L.lambda) + pi = id", map_add(ll, pr) == identity_map(m));
        rep.add("(L.lambda).pi = 0", compose(ll, pr).is_zero());
        rep.add("pi.(L.lambda) = 0", compose(pr, ll).is_zero());
        for (std::size_t k = 0; k <= top; ++k) {
            if (m.b(k) == 0) continue;
            const std::size_t pk = strings.primitive_rank[k];
            const std::size_t rk = rank(pr.blocks[k]);
            const bool image_ok =
                rk == pk && out.lambda.blocks[k].cols() == m.b(k) &&
                (pk == 0 || (out.lambda.blocks[k] * (pr.blocks[k])).is_zero());
            rep.add("Im pi = Ker lambda degree " + std::to_string(k), image_ok,
                    "rank " + std::to_string(rk) + " primitive " + std::to_string(pk));
            // rank pi + rank(L: H^{k-2} -> H^k) = b_k
            const std::size_t lr = k >= 2 ? rank(m.lefschetz_block(k - 2)) : 0;
            rep.add("rank split degree " + std::to_string(k), rk + lr == m.b(k));
        }
    }
    out.pr_projector = std::move(pr);

    // Decomposition report: summand independence was the exhaustion check;
    // record ranks and the two exact orthogonality statements.
    PrimitiveDecomposition dec;
    dec.primitive_rank = strings.primitive_rank;
    dec.primitive_basis = strings.primitive_basis;
    dec.summands = strings.summands;
    dec.report.subject = "primitive decomposition of '" + m.name + "'";
    const std::size_t n = m.dim;
    for (std::size_t k = 0; k <= top; ++k) {
        if (m.b(k) == 0) continue;
        dec.report.add("degree " + std::to_string(k) + " exhausted",
                       strings.degree_basis[k].cols() == m.b(k) &&
                           rank(strings.degree_basis[k]) == m.b(k),
                       std::to_string(strings.summands[k].size()) + " summands");
    }
    // (a) Within degree k <= n: distinct summands are orthogonal for the
    //     twisted form <x, L^{n-k} y>; at k = n this is the cup pairing.
    for (std::size_t k = 0; k <= n; ++k) {
        if (m.b(k) == 0 || strings.summands[k].size() < 2) continue;
        const std::size_t j0 = n - k;
        bool ok = true;
        const Matrix twist = m.pairing_block(k) * m.lefschetz_power(k, j0);
        for (std::size_t a = 0; a < strings.summands[k].size(); ++a)
            for (std::size_t b = 0; b < strings.summands[k].size(); ++b) {
                if (a == b) continue;
                const Matrix g =
                    strings.summands[k][a].basis.transposed() * twist * strings.summands[k][b].basis;
                if (!g.is_zero()) ok = false;
            }
        dec.report.add("twisted orthogonality degree " + std::to_string(k), ok);
    }
    // (b) Across complementary degrees: <P^k, L^{n-k+1} H^{k-2}> = 0.
    for (std::size_t k = 0; k <= n; ++k) {
        if (strings.primitive_rank[k] == 0 || k < 2 || m.b(k - 2) == 0) continue;
        const Matrix img = m.lefschetz_power(k - 2, n - k + 1); // H^{k-2} -> H^{2n-k}
        if (img.rows() == 0) continue;
        const Matrix g = strings.primitive_basis[k].transposed() * m.pairing_block(k) * img;
        dec.report.add("cup orthogonality primitives degree " + std::to_string(k), g.is_zero());
    }
    out.report.merge(dec.report);
    out.decomposition = std::move(dec);
    return out;
}

GradedMap build_lambda(const CohomologyModel& m) {
    LefschetzAnalysis a = analyze_lefschetz(m);
    if (!a.report.passed()) throw InternalError("lambda verification failed: " + a.report.first_failure());
    return a.lambda;
}

GradedMap primitive_projector(const CohomologyModel& m) {
    LefschetzAnalysis a = analyze_lefschetz(m);
    if (!a.report.passed()) throw InternalError("projector verification failed: " + a.report.first_failure());
    return a.pr_projector;
}

PrimitiveDecomposition primitive_decomposition(const CohomologyModel& m) {
    return analyze_lefschetz(m).decomposition;
}

Report verify_lambda_identities(const CohomologyModel& m, const GradedMap& lambda) {
    Report rep;
    rep.subject = "lambda identities for '" + m.name + "'";
    const GradedMap l = lefschetz_map(m);
    const GradedMap ll = compose(l, lambda);
    rep.add("L.lambda.L = L (identity on Im L)", compose(ll, l) == l);
    rep.add("lambda.L.lambda = lambda (identity on Im lambda)", compose(lambda, compose(l, lambda)) == lambda);
    return rep;
}

} // namespace primsplit
