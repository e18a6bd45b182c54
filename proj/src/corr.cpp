#include "primsplit/corr.hpp"

#include "primsplit/randmat.hpp"

#include <stdexcept>

namespace primsplit {

namespace {

// P(t) = sum_{j=1..N} (-1)^{j+1} C(N,j) t^{j-1}, constant term first.
std::vector<Rational> lift_poly_coeffs(std::size_t n) {
    std::vector<Rational> c(n);
    mpz_class binom = static_cast<long>(n); // C(n, 1)
    for (std::size_t j = 1; j <= n; ++j) {
        mpz_class v = binom;
        if (j % 2 == 0) v = -v;
        c[j - 1] = Rational(v, mpz_class(1));
        binom = binom * mpz_class(static_cast<long>(n - j)) / mpz_class(static_cast<long>(j + 1));
    }
    return c;
}

Matrix eval_poly(const std::vector<Rational>& coeffs, const Matrix& x) {
    Matrix acc(x.rows(), x.cols());
    for (std::size_t i = coeffs.size(); i > 0; --i) {
        acc = acc * x;
        for (std::size_t d = 0; d < x.rows(); ++d) acc.at(d, d) += coeffs[i - 1];
    }
    return acc;
}

} // namespace

AlgebraElement compose(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.realization_basis != b.realization_basis)
        throw std::invalid_argument("compose: elements live in different realizations");
    return {a.mat * b.mat, a.realization_basis, a.degree + b.degree};
}

Matrix in_realization_basis(const AlgebraElement& a) {
    if (a.realization_basis.rows() == 0 || a.realization_basis.is_identity()) return a.mat;
    auto gi = inverse(a.realization_basis);
    if (!gi) throw std::invalid_argument("realization basis is singular");
    return *gi * a.mat * a.realization_basis;
}

bool in_represented_subalgebra(const AlgebraElement& a) {
    const Matrix t = in_realization_basis(a);
    for (std::size_t i = 1; i < t.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!t.at(i, j).is_zero()) return false;
    return true;
}

Matrix realization(const AlgebraElement& a) {
    const Matrix t = in_realization_basis(a);
    Matrix d(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i) d.at(i, i) = t.at(i, i);
    return d;
}

Report check_nilpotent_action(const AlgebraElement& a) {
    Report rep;
    rep.subject = "nilpotent-action check";
    if (a.mat.rows() != a.mat.cols()) {
        rep.add("square matrix", false);
        return rep;
    }
    if (!in_represented_subalgebra(a)) {
        rep.skip("realization defined", "element not in the represented subalgebra");
        return rep;
    }
    if (!realization(a).is_zero()) {
        rep.skip("trivial action", "hypothesis not met: realization is nonzero");
        return rep;
    }
    const auto idx = nilpotency_index(a.mat);
    rep.add("nilpotent", idx.has_value(),
            idx ? "index " + std::to_string(*idx) : "no power vanishes");
    return rep;
}

std::optional<std::size_t> defect_nilpotency(const AlgebraElement& e) {
    if (e.mat.rows() != e.mat.cols()) throw std::invalid_argument("defect_nilpotency: matrix not square");
    const Matrix defect = e.mat * e.mat - e.mat;
    return nilpotency_index(defect);
}

std::optional<LiftReport> lift_idempotent(const AlgebraElement& e) {
    const auto n_opt = defect_nilpotency(e);
    if (!n_opt) return std::nullopt;
    const std::size_t n = std::max<std::size_t>(*n_opt, 1);
    const std::size_t dim = e.mat.rows();

    LiftReport out;
    out.input = e;
    out.defect_index = n;
    out.poly = lift_poly_coeffs(n);

    const Matrix one = Matrix::identity(dim);
    const Matrix one_minus_e = one - e.mat;
    const Matrix inner = one - matrix_power(one_minus_e, n); // = P(e) e
    out.lifted = matrix_power(inner, n);

    Report& rep = out.verification;
    rep.subject = "idempotent lift";
    rep.add("E.E = E", out.lifted * out.lifted == out.lifted);
    rep.add("e^N (1-e)^N = 0", (matrix_power(e.mat, n) * matrix_power(one_minus_e, n)).is_zero());
    const Matrix pe = eval_poly(out.poly, e.mat);
    rep.add("1 - (1-e)^N = P(e) e", inner == pe * e.mat);
    rep.add("1 - (1-e)^N = e P(e)", inner == e.mat * pe);
    rep.add("E - e nilpotent", nilpotency_index(out.lifted - e.mat).has_value());
    if (in_represented_subalgebra(e)) {
        const Matrix re = realization(e);
        if (re * re == re) {
            AlgebraElement lifted_elt{out.lifted, e.realization_basis, e.degree};
            rep.add("realization(E) = realization(e)", realization(lifted_elt) == re);
        } else {
            rep.skip("realization(E) = realization(e)", "realization of e is not idempotent");
        }
    } else {
        rep.skip("realization(E) = realization(e)", "element not in the represented subalgebra");
    }
    if (!rep.passed())
        throw InternalError("idempotent lift verification failed: " + rep.first_failure());
    return out;
}

namespace {

std::optional<LambdaRResult> lambda_r_impl(const AlgebraElement& lambda, const AlgebraElement& lr,
                                           std::size_t r, bool mirrored) {
    if (lambda.realization_basis != lr.realization_basis)
        throw std::invalid_argument("build_lambda_r: realization bases differ");
    const Matrix lam_r = matrix_power(lambda.mat, r);
    const Matrix e_mat = mirrored ? lam_r * lr.mat : lr.mat * lam_r;
    AlgebraElement e{e_mat, lr.realization_basis, lr.degree + static_cast<int>(r) * lambda.degree};

    auto lift = lift_idempotent(e);
    if (!lift) return std::nullopt;
    const std::size_t n = lift->defect_index;

    const Matrix pe = eval_poly(lift->poly, e.mat);
    const Matrix pen = matrix_power(pe, n);
    const Matrix e_pow = matrix_power(e.mat, n - 1);

    LambdaRResult out;
    // Lambda_r = Lambda^r e^{N-1} P(e)^N; the mirror exchanges the factors.
    out.lambda_r.mat = mirrored ? pen * e_pow * lam_r : lam_r * e_pow * pen;
    out.lambda_r.realization_basis = lambda.realization_basis;
    out.lambda_r.degree = static_cast<int>(r) * lambda.degree + (static_cast<int>(n) - 1) * e.degree;
    out.projector = mirrored ? out.lambda_r.mat * lr.mat : lr.mat * out.lambda_r.mat;

    Report& rep = out.verification;
    rep.subject = mirrored ? "mirrored lambda_r construction" : "lambda_r construction";
    rep.add(mirrored ? "Lambda_r.L^r = E" : "L^r.Lambda_r = E", out.projector == lift->lifted);
    rep.add("projector idempotent", out.projector * out.projector == out.projector);
    rep.add("degree tag", out.lambda_r.degree == -static_cast<int>(r));
    if (in_represented_subalgebra(e)) {
        AlgebraElement proj{out.projector, e.realization_basis, 0};
        rep.add("realization(projector) = realization(e)", realization(proj) == realization(e));
    }
    if (!rep.passed())
        throw InternalError("lambda_r verification failed: " + rep.first_failure());
    return out;
}

} // namespace

std::optional<LambdaRResult> build_lambda_r(const AlgebraElement& lambda, const AlgebraElement& lr,
                                            std::size_t r) {
    return lambda_r_impl(lambda, lr, r, false);
}

std::optional<LambdaRResult> build_lambda_r_tilde(const AlgebraElement& lambda,
                                                  const AlgebraElement& lr, std::size_t r) {
    return lambda_r_impl(lambda, lr, r, true);
}

AlgebraElement gen_nilpotent_defect(std::uint64_t seed, std::size_t size) {
    if (size < 1) throw std::invalid_argument("gen_nilpotent_defect: size must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> small(-3, 3);
    Matrix tri(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        tri.at(i, i) = Rational(bit(rng));
        for (std::size_t j = i + 1; j < size; ++j) {
            const int v = small(rng);
            tri.at(i, j) = Rational(v == 2 ? 0 : v); // sprinkle zeros
        }
    }
    const Matrix g = random_unimodular(rng, size);
    const Matrix gi = *inverse(g);
    return {g * tri * gi, g, 0};
}

} // namespace primsplit
