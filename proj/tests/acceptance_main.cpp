// Acceptance suite: one check per criterion, one PASS/FAIL line each, exit
// status 0 only if everything passes. Every comparison is exact.

#include "primsplit/equivariant.hpp"
#include "primsplit/generators.hpp"
#include "primsplit/io.hpp"
#include "primsplit/surface.hpp"

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef PRIMSPLIT_CLI_PATH
#define PRIMSPLIT_CLI_PATH "primsplit"
#endif

using namespace primsplit;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// ---------------------------------------------------------------- criterion 1

Criterion lefschetz_suite() {
    Criterion c;
    std::vector<CohomologyModel> models;
    for (std::size_t n = 1; n <= 5; ++n) models.push_back(gen_projective_space(n));
    models.push_back(gen_product_p1p1());

    std::vector<std::vector<std::size_t>> oracles(models.size()); // empty = no oracle
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const JordanModel jm = gen_jordan_strings(seed, jordan_profile_from_seed(seed, 40));
        c.require(jm.model.total_dim() <= 40, "jordan model too large");
        models.push_back(jm.model);
        oracles.push_back(jm.primitive_rank);
    }

    for (std::size_t i = 0; i < models.size(); ++i) {
        const CohomologyModel& m = models[i];
        c.require(validate_model(m).passed(), m.name + ": validation failed");
        c.require(verify_hard_lefschetz(m).passed(), m.name + ": hard Lefschetz failed");
        if (!c.ok) break;
        const LefschetzAnalysis a = analyze_lefschetz(m);
        c.require(verify_lambda_identities(m, a.lambda).passed(), m.name + ": lambda identities");
        c.require(is_idempotent(a.pr_projector), m.name + ": primitive projector not idempotent");
        c.require(a.report.passed(), m.name + ": " + a.report.first_failure());
        c.require(a.decomposition.report.passed(),
                  m.name + ": decomposition: " + a.decomposition.report.first_failure());
        if (!oracles[i].empty())
            c.require(a.decomposition.primitive_rank == oracles[i],
                      m.name + ": primitive ranks differ from the recorded string bottoms");
        if (!c.ok) break;
    }
    if (c.ok)
        c.detail = std::to_string(models.size()) +
                   " models: hard Lefschetz, lambda identities, projector, orthogonality, "
                   "string-top oracle all exact";
    return c;
}

// ---------------------------------------------------------------- criterion 2

Criterion splitting_suite() {
    Criterion c;
    for (std::size_t d : {2, 3, 4}) {
        const std::size_t b2 = d * d * d - 4 * d * d + 6 * d - 2; // Euler-characteristic oracle
        const EmbeddingModel e = gen_ci_embedding(d);
        c.require(validate_embedding(e).passed(), "d=" + std::to_string(d) + ": validation");
        const SplitResult s = split(e);
        c.require(map_add(s.pi_fix, s.pi_var) == identity_map(e.sub),
                  "d=" + std::to_string(d) + ": pi_fix + pi_var != id");
        c.require(s.report.passed(), "d=" + std::to_string(d) + ": " + s.report.first_failure());
        c.require(s.dims[2] == std::make_pair<std::size_t, std::size_t>(1u, b2 - 1),
                  "d=" + std::to_string(d) + ": middle ranks not (1, " + std::to_string(b2 - 1) + ")");
        c.require(verify_pr_pushforward(e).passed(), "d=" + std::to_string(d) + ": p_r i_* != i_*");
        const PrProjector pr = build_p_r(e);
        c.require(compose(pr.map, compose(pr.map, pr.map)) == pr.map,
                  "d=" + std::to_string(d) + ": p_r^3 != p_r");
        if (!c.ok) break;
    }
    if (c.ok)
        c.detail = "d = 2, 3, 4: projector laws, image characterizations, middle ranks "
                   "(1,1)/(1,6)/(1,21), p_r i_* = i_*, p_r^3 = p_r";
    return c;
}

// ---------------------------------------------------------------- criterion 3

Criterion lift_suite() {
    Criterion c;
    for (std::uint64_t seed = 0; seed < 100 && c.ok; ++seed) {
        const std::size_t size = 2 + seed % 7; // sizes 2..8
        const AlgebraElement e = gen_nilpotent_defect(seed, size);
        const auto lift = lift_idempotent(e);
        if (!lift) {
            c.require(false, "seed " + std::to_string(seed) + ": lift failed");
            break;
        }
        const Matrix& big_e = lift->lifted;
        c.require(big_e * big_e == big_e, "seed " + std::to_string(seed) + ": E^2 != E");
        c.require(nilpotency_index(big_e - e.mat).has_value(),
                  "seed " + std::to_string(seed) + ": E - e not nilpotent");
        c.require(realization(AlgebraElement{big_e, e.realization_basis, 0}) == realization(e),
                  "seed " + std::to_string(seed) + ": realization changed");
        c.require(lift->verification.passed(),
                  "seed " + std::to_string(seed) + ": " + lift->verification.first_failure());
    }
    // worked examples
    {
        const auto lift = lift_idempotent({Matrix{{1, 1}, {0, 1}}, Matrix::identity(2), 0});
        c.require(lift && lift->lifted == Matrix::identity(2), "[[1,1],[0,1]] must lift to id");
        const auto lift0 = lift_idempotent({Matrix{{0, 1}, {0, 0}}, Matrix::identity(2), 0});
        c.require(lift0 && lift0->lifted.is_zero(), "square-zero element must lift to 0");
    }
    if (c.ok)
        c.detail = "100 generated elements (sizes 2..8) plus both worked examples: lift, "
                   "polynomial identity, realization all exact";
    return c;
}

// ---------------------------------------------------------------- criterion 4

Criterion realization_suite() {
    Criterion c;
    std::size_t count = 0;
    for (std::size_t d : {2, 3, 4}) {
        const EmbeddingModel e = gen_ci_embedding(d);
        const ModuleRealization self = self_realization(e);
        c.require(check_module_realization(e, self).passed(),
                  "d=" + std::to_string(d) + ": self-realization failed");
        ++count;
        if (!c.ok) break;
        // basis-conjugated copies; identities are basis independent
        const std::size_t reps = d == 2 ? 7 : d == 3 ? 7 : 6;
        for (std::uint64_t seed = 0; seed < reps; ++seed) {
            const ModuleRealization conj = conjugate_realization(self, seed * 13 + d);
            c.require(check_module_realization(e, conj).passed(),
                      "d=" + std::to_string(d) + " seed " + std::to_string(seed) + ": conjugated");
            ++count;
            if (!c.ok) break;
        }
    }
    if (c.ok)
        c.detail = std::to_string(count) +
                   " realizations (3 self + 20 conjugated): kernel and image statements exact";
    return c;
}

// ---------------------------------------------------------------- criterion 5

Criterion equivariant_suite() {
    Criterion c;
    const EmbeddingModel e = gen_ci_embedding(2);
    const ActionFile a = gen_quadric_ruling_swap();
    c.require(validate_action(a.sub).passed(), "action validation failed");

    const ChiProjector triv = projector_chi(a.sub, a.characters.at("trivial"));
    const ChiProjector sign = projector_chi(a.sub, a.characters.at("sign"));
    c.require(triv.report.passed() && is_idempotent(triv.map), "trivial projector");
    c.require(sign.report.passed() && is_idempotent(sign.map), "sign projector");
    c.require(map_add(triv.map, sign.map) == identity_map(a.sub.model), "sum over characters != id");

    const SplitResult s = split(e);
    c.require(compose(triv.map, s.pi_fix) == compose(s.pi_fix, triv.map), "pi_chi pi_fix commutation");
    c.require(compose(sign.map, s.pi_fix) == compose(s.pi_fix, sign.map), "pi_chi pi_fix commutation");

    const EquivariantSplit es = equivariant_split(e, a.sub, *a.ambient, a.characters.at("sign"));
    c.require(es.report.passed(), es.report.first_failure());
    c.require(map_rank(es.var_chi, 2) == 1, "pi_var o pi_sign rank != 1 in degree 2");
    c.require(map_rank(es.fix_chi, 2) == 0, "pi_fix o pi_sign rank != 0 in degree 2");
    if (c.ok)
        c.detail = "ruling swap on the quadric: both characters idempotent, complete, commuting; "
                   "sign character isolates the variable line";
    return c;
}

// ---------------------------------------------------------------- criterion 6

Criterion surface_suite() {
    Criterion c;
    const SurfaceModel quadric{gen_hypersurface_p3(2),
                               {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
    Vec h22(22);
    h22[0] = Rational(1);
    const SurfaceModel quartic{gen_hypersurface_p3(4), {h22}};

    const ChowLefschetzPieces q2 = chow_lefschetz(quadric);
    c.require(q2.report.passed(), "quadric pieces: " + q2.report.first_failure());
    const ChowLefschetzPieces q4 = chow_lefschetz(quartic);
    c.require(q4.report.passed(), "quartic pieces: " + q4.report.first_failure());
    c.require(map_rank(q4.pi2_alg, 2) == 1 && map_rank(q4.pi2_tr, 2) == 21,
              "quartic (alg, tr) ranks != (1, 21)");

    const ChowLefschetzPieces r2 = refine_with_splitting(quadric, gen_ci_embedding(2), true);
    c.require(r2.report.passed(), "quadric refinement: " + r2.report.first_failure());
    const ChowLefschetzPieces r4 = refine_with_splitting(quartic, gen_ci_embedding(4), false);
    c.require(r4.report.passed(), "quartic refinement: " + r4.report.first_failure());
    c.require(map_add(*r4.pi2_alg_fix, *r4.pi2_alg_var) == r4.pi2_alg,
              "pi2_alg != pi2_alg_fix + pi2_alg_var");
    c.require(map_add(*r2.pi2_alg_fix, *r2.pi2_alg_var) == r2.pi2_alg,
              "pi2_alg != pi2_alg_fix + pi2_alg_var (quadric)");

    // basis independence of the algebraic projector
    const Matrix ref = algebraic_projector(quadric.base, quadric.algebraic_classes);
    const std::vector<std::vector<Vec>> rebases = {
        {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}},
        {{Rational(2), Rational(1)}, {Rational(1), Rational(1)}},
        {{Rational(1), Rational(-1)}, {Rational(3), Rational(2)}}};
    for (const auto& basis : rebases)
        c.require(algebraic_projector(quadric.base, basis) == ref,
                  "pi2_alg depends on the chosen basis");
    if (c.ok)
        c.detail = "quadric and quartic: unrefined/refined pieces resolve the identity with "
                   "vanishing products, the algebraic piece splits, ranks (1, 21), basis-free";
    return c;
}

// ---------------------------------------------------------------- criterion 7

int run_cli(const std::string& args) {
    const std::string cmd = std::string(PRIMSPLIT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

Criterion cli_suite() {
    Criterion c;
    // byte-stable serialization (fixed key order)
    {
        const EmbeddingModel e = gen_ci_embedding(3);
        const std::string s1 = embedding_to_json(e).dump(2);
        const std::string s2 = embedding_to_json(embedding_from_json(json::parse(s1), ".")).dump(2);
        c.require(s1 == s2, "embedding serialization not byte-stable");
        const CohomologyModel m = gen_jordan_strings(3, {5, 3, 1}).model;
        const std::string t1 = model_to_json(m).dump(2);
        const std::string t2 = model_to_json(model_from_json(json::parse(t1))).dump(2);
        c.require(t1 == t2, "model serialization not byte-stable");
    }

    const fs::path dir = fs::temp_directory_path() / "primsplit-acceptance";
    fs::create_directories(dir);
    const fs::path good = dir / "good-embedding.json";
    const fs::path bad = dir / "bad-embedding.json";
    const fs::path truncated = dir / "truncated.json";
    {
        const EmbeddingModel e = gen_ci_embedding(2);
        std::ofstream(good) << embedding_to_json(e).dump(2);
        EmbeddingModel broken = e;
        broken.pushforward.blocks[2].at(0, 0) += Rational(1);
        std::ofstream(bad) << embedding_to_json(broken).dump(2);
        const std::string full = embedding_to_json(e).dump(2);
        std::ofstream(truncated) << full.substr(0, full.size() / 2);
    }
    c.require(run_cli("validate " + good.string()) == 0, "exit code for a valid embedding != 0");
    c.require(run_cli("validate " + bad.string()) == 1, "exit code for a corrupted embedding != 1");
    c.require(run_cli("validate " + truncated.string()) == 2, "exit code for a truncated file != 2");
    c.require(run_cli("split " + good.string()) == 0, "split on the quadric should pass");
    c.require(run_cli("gen no-such-builtin") == 2, "unknown builtin should exit 2");
    const fs::path k3 = dir / "k3.json";
    c.require(run_cli("gen hypersurface-p3 --d 4 --output " + k3.string()) == 0, "gen should write");
    c.require(run_cli("lefschetz " + k3.string() + " --json") == 0, "lefschetz on the generated file");
    c.require(model_from_json(load_json_file(k3)).betti[2] == 22, "generated b_2 != 22");
    if (c.ok)
        c.detail = "round-trips byte-stable; exit codes 0/1/2 honored on pass, verification "
                   "failure and parse failure";
    return c;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion (*fn)();
    };
    const Entry entries[] = {
        {"criterion 1: Lefschetz suite", lefschetz_suite},
        {"criterion 2: splitting suite", splitting_suite},
        {"criterion 3: idempotent-lift suite", lift_suite},
        {"criterion 4: module-realization suite", realization_suite},
        {"criterion 5: equivariant suite", equivariant_suite},
        {"criterion 6: surface suite", surface_suite},
        {"criterion 7: CLI contract", cli_suite},
    };
    bool all_ok = true;
    for (const Entry& e : entries) {
        Criterion c;
        try {
            c = e.fn();
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << e.name << " -- " << c.detail << "\n";
        all_ok = all_ok && c.ok;
    }
    std::cout << (all_ok ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
    return all_ok ? 0 : 1;
}
