#include "primsplit/generators.hpp"
#include "primsplit/model.hpp"

#include <doctest.h>

using namespace primsplit;

namespace {

// Genus-one curve shape: odd-degree cohomology with antisymmetric pairing.
CohomologyModel elliptic_curve_model() {
    CohomologyModel m;
    m.name = "elliptic";
    m.dim = 1;
    m.betti = {1, 2, 1};
    m.pairing.resize(3);
    m.pairing[0] = Matrix{{1}};
    m.pairing[1] = Matrix{{0, 1}, {-1, 0}};
    m.pairing[2] = Matrix{{1}};
    m.lefschetz.resize(1);
    m.lefschetz[0] = Matrix{{1}};
    return m;
}

} // namespace

TEST_CASE("builtin models validate") {
    for (std::size_t n = 0; n <= 5; ++n) {
        const CohomologyModel m = gen_projective_space(n);
        CHECK(validate_model(m).passed());
        CHECK(verify_hard_lefschetz(m).passed());
    }
    CHECK(validate_model(gen_product_p1p1()).passed());
    CHECK(verify_hard_lefschetz(gen_product_p1p1()).passed());
    for (std::size_t d : {1, 2, 3, 4, 5}) {
        const CohomologyModel m = gen_hypersurface_p3(d);
        CHECK(validate_model(m).passed());
        CHECK(verify_hard_lefschetz(m).passed());
    }
}

TEST_CASE("odd-degree cohomology is supported") {
    const CohomologyModel m = elliptic_curve_model();
    CHECK(validate_model(m).passed());
    CHECK(verify_hard_lefschetz(m).passed());
}

TEST_CASE("b_0 != 1 is rejected") {
    CohomologyModel m = gen_projective_space(1);
    m.betti[0] = 2;
    m.pairing[0] = Matrix(2, 1);
    const Report rep = validate_model(m);
    CHECK_FALSE(rep.passed());
    bool found = false;
    for (const auto& c : rep.checks)
        if (c.name == "b_0 = 1" && c.status == CheckStatus::fail) found = true;
    CHECK(found);
}

TEST_CASE("rank-deficient pairing is rejected") {
    CohomologyModel m = gen_product_p1p1();
    m.pairing[2] = Matrix{{1, 1}, {1, 1}}; // symmetric but singular
    const Report rep = validate_model(m);
    CHECK_FALSE(rep.passed());
    bool found = false;
    for (const auto& c : rep.checks)
        if (c.name == "pairing perfect degree 2" && c.status == CheckStatus::fail) found = true;
    CHECK(found);
}

TEST_CASE("non-self-adjoint L is rejected") {
    CohomologyModel m = gen_product_p1p1();
    m.lefschetz[0] = Matrix{{1}, {2}}; // <L1, e> != <1, Le> now
    CHECK_FALSE(validate_model(m).passed());
}

TEST_CASE("L = 0 fails hard Lefschetz at j = 1") {
    CohomologyModel m = gen_projective_space(1);
    m.lefschetz[0] = Matrix(1, 1);
    CHECK(validate_model(m).passed()); // self-adjointness is fine for the zero map
    const Report rep = verify_hard_lefschetz(m);
    CHECK_FALSE(rep.passed());
    CHECK(rep.first_failure().find("L^1") != std::string::npos);
}

TEST_CASE("graded map algebra") {
    const CohomologyModel m = gen_projective_space(2);
    const GradedMap id = identity_map(m);
    const GradedMap l = lefschetz_map(m);
    CHECK(is_idempotent(id));
    CHECK(compose(id, l) == l);
    CHECK(compose(l, id) == l);
    CHECK(map_sub(l, l).is_zero());
    // L^3 on P^2 leaves the grading everywhere: zero map of shift +6
    const GradedMap l3 = compose(l, compose(l, l));
    CHECK(l3.shift == 6);
    CHECK(l3.is_zero());
}

TEST_CASE("composites through the zero space keep endomorphism shapes") {
    const CohomologyModel m = gen_projective_space(1);
    const GradedMap l = lefschetz_map(m);
    // L^2 = 0 on P^1, as a shift +4 map with zero-dimensional targets
    const GradedMap l2 = compose(l, l);
    CHECK(l2.is_zero());
    for (std::size_t k = 0; k <= 2; ++k) CHECK(l2.blocks[k].cols() == m.b(k));
}
