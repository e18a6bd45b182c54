#include "primsplit/corr.hpp"

#include <doctest.h>

using namespace primsplit;

namespace {

AlgebraElement plain(Matrix m, int degree = 0) {
    const std::size_t n = m.rows();
    return {std::move(m), Matrix::identity(n), degree};
}

} // namespace

TEST_CASE("defect nilpotency") {
    CHECK(defect_nilpotency(plain(Matrix::identity(3))) == 1); // idempotent: defect 0
    CHECK(defect_nilpotency(plain(Matrix{{1, 1}, {0, 1}})) == 2);
    CHECK_FALSE(defect_nilpotency(plain(Matrix{{2, 0}, {0, 0}}))); // eigenvalue 2 persists
}

TEST_CASE("idempotents lift to themselves") {
    const Matrix p{{1, 0}, {0, 0}};
    const auto lift = lift_idempotent(plain(p));
    REQUIRE(lift);
    CHECK(lift->defect_index == 1);
    CHECK(lift->lifted == p);
    CHECK(lift->poly == std::vector<Rational>{Rational(1)});
}

TEST_CASE("worked example: [[1,1],[0,1]] lifts to the identity") {
    const auto lift = lift_idempotent(plain(Matrix{{1, 1}, {0, 1}}));
    REQUIRE(lift);
    CHECK(lift->defect_index == 2);
    CHECK(lift->lifted == Matrix::identity(2));
    // E - e = [[0,-1],[0,0]] is nilpotent
    CHECK(nilpotency_index(lift->lifted - Matrix{{1, 1}, {0, 1}}) == 2);
    CHECK(lift->verification.passed());
}

TEST_CASE("worked example: square-zero elements lift to 0") {
    const Matrix e{{0, 3}, {0, 0}}; // e^2 = 0
    const auto lift = lift_idempotent(plain(e));
    REQUIRE(lift);
    CHECK(lift->defect_index == 2);
    CHECK(lift->lifted.is_zero());
}

TEST_CASE("non-liftable element is reported as such") {
    CHECK_FALSE(lift_idempotent(plain(Matrix{{2, 0}, {0, 0}})));
}

TEST_CASE("nilpotent-action check") {
    // strictly upper triangular with zero realization: nilpotent, index reported
    AlgebraElement a = plain(Matrix{{0, 1}, {0, 0}});
    Report rep = check_nilpotent_action(a);
    CHECK(rep.passed());
    CHECK(rep.checks.back().details.find("index 2") != std::string::npos);

    // the identity acts nontrivially: hypothesis not met
    rep = check_nilpotent_action(plain(Matrix::identity(2)));
    CHECK(rep.checks.back().status == CheckStatus::skip);
    CHECK(rep.checks.back().details.find("hypothesis not met") != std::string::npos);
}

TEST_CASE("generated elements always lift, with the polynomial identity exact") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t size = 2 + seed % 7;
        const AlgebraElement e = gen_nilpotent_defect(seed, size);
        const auto n = defect_nilpotency(e);
        REQUIRE(n);
        CHECK(*n <= size);
        const auto lift = lift_idempotent(e);
        REQUIRE(lift);
        CHECK(lift->verification.passed()); // E^2 = E, P(e)e identity, realization match
        CHECK(realization(AlgebraElement{lift->lifted, e.realization_basis, 0}) == realization(e));
    }
}

TEST_CASE("lambda_r: exact-inverse input collapses to Lambda^r") {
    // L and Lambda diagonal idempotent partners: e = L Lambda is idempotent, N = 1
    const Matrix l{{1, 0}, {0, 0}};
    const AlgebraElement lambda{l, Matrix::identity(2), -1};
    const AlgebraElement lr{l, Matrix::identity(2), 1};
    const auto res = build_lambda_r(lambda, lr, 1);
    REQUIRE(res);
    CHECK(res->lambda_r.mat == l); // Lambda^1 e^0 P(e)^1 = Lambda
    CHECK(res->lambda_r.degree == -1);
    CHECK(res->verification.passed());
}

TEST_CASE("lambda_r: triangular perturbation still yields an exact projector") {
    // e = Lr Lambda has nilpotent defect but is not idempotent itself
    const Matrix lr_m{{1, 2, 0}, {0, 1, 1}, {0, 0, 0}};
    const Matrix lam_m{{1, -1, 0}, {0, 1, 0}, {0, 0, 1}};
    const AlgebraElement lambda{lam_m, Matrix::identity(3), -1};
    const AlgebraElement lr{lr_m, Matrix::identity(3), 1};
    const auto res = build_lambda_r(lambda, lr, 1);
    REQUIRE(res);
    CHECK(res->projector * res->projector == res->projector);
    CHECK(res->projector == lr_m * res->lambda_r.mat);

    const auto mirror = build_lambda_r_tilde(lambda, lr, 1);
    REQUIRE(mirror);
    CHECK(mirror->projector * mirror->projector == mirror->projector);
    CHECK(mirror->projector == mirror->lambda_r.mat * lr_m);
}

TEST_CASE("degree tags add under composition") {
    const AlgebraElement a = plain(Matrix::identity(2), 3);
    const AlgebraElement b = plain(Matrix::identity(2), -1);
    CHECK(compose(a, b).degree == 2);
}
