// Command-line front end: validation, the Lefschetz pipeline, fixed/variable
// splitting, idempotent lifting, equivariant refinement and the builtin
// generators, with text or JSON reports.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 input/parse error.

#include "primsplit/generators.hpp"
#include "primsplit/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace ps = primsplit;

namespace {

struct Output {
    bool as_json = false;
    std::string path; // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty())
            std::cout << text;
        else
            ps::write_text_file(path, text);
    }
};

int finish(const std::vector<ps::Report>& reports, const Output& out) {
    bool ok = true;
    if (out.as_json) {
        ps::json j = ps::json::array();
        for (const auto& r : reports) {
            j.push_back(ps::report_to_json(r));
            ok = ok && r.passed();
        }
        out.emit(j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << ps::report_to_text(r) << "\n";
            ok = ok && r.passed();
        }
        out.emit(os.str());
    }
    return ok ? 0 : 1;
}

ps::Report model_validation(const ps::CohomologyModel& m) {
    ps::Report rep = ps::validate_model(m);
    if (rep.passed()) rep.merge(ps::verify_hard_lefschetz(m));
    return rep;
}

int run_validate(const std::string& path, const Output& out) {
    const ps::json j = ps::load_json_file(path);
    const auto base = std::filesystem::path(path).parent_path();
    std::vector<ps::Report> reports;
    switch (ps::detect_kind(j)) {
    case ps::FileKind::model:
        reports.push_back(model_validation(ps::model_from_json(j)));
        break;
    case ps::FileKind::embedding: {
        const ps::EmbeddingModel e = ps::embedding_from_json(j, base);
        reports.push_back(model_validation(e.ambient));
        reports.push_back(model_validation(e.sub));
        reports.push_back(ps::validate_embedding(e));
        break;
    }
    case ps::FileKind::action: {
        const ps::ActionFile a = ps::action_file_from_json(j, base);
        reports.push_back(model_validation(a.sub.model));
        reports.push_back(ps::validate_action(a.sub));
        if (a.ambient) reports.push_back(ps::validate_action(*a.ambient));
        break;
    }
    case ps::FileKind::algebra_element: {
        const ps::AlgebraElement a = ps::algebra_element_from_json(j);
        ps::Report rep;
        rep.subject = "validate algebra element";
        rep.add("realization basis invertible", ps::inverse(a.realization_basis).has_value());
        reports.push_back(std::move(rep));
        break;
    }
    case ps::FileKind::surface: {
        const ps::SurfaceModel s = ps::surface_from_json(j);
        reports.push_back(model_validation(s.base));
        ps::Report rep;
        rep.subject = "validate surface classes";
        try {
            ps::orthogonalize_classes(s);
            rep.add("algebraic Gram matrix invertible", true);
        } catch (const ps::DegenerateFormError& e) {
            rep.add("algebraic Gram matrix invertible", false, e.what());
        }
        reports.push_back(std::move(rep));
        break;
    }
    }
    return finish(reports, out);
}

int run_lefschetz(const std::string& path, const Output& out) {
    const ps::json j = ps::load_json_file(path);
    if (ps::detect_kind(j) != ps::FileKind::model && ps::detect_kind(j) != ps::FileKind::surface)
        throw ps::ParseError("lefschetz expects a model file");
    const ps::CohomologyModel m = ps::model_from_json(j);
    std::vector<ps::Report> reports;
    reports.push_back(model_validation(m));
    if (!reports.back().passed()) return finish(reports, out);

    const ps::LefschetzAnalysis a = ps::analyze_lefschetz(m);
    reports.push_back(a.report);
    ps::Report table;
    table.subject = "primitive ranks of '" + m.name + "'";
    for (std::size_t k = 0; k <= m.top(); ++k)
        table.add("degree " + std::to_string(k), true,
                  "b = " + std::to_string(m.b(k)) +
                      ", primitive = " + std::to_string(a.decomposition.primitive_rank[k]) +
                      ", pi_pr rank = " + std::to_string(ps::map_rank(a.pr_projector, k)));
    reports.push_back(std::move(table));
    return finish(reports, out);
}

int run_split(const std::string& path, const Output& out) {
    const ps::json j = ps::load_json_file(path);
    if (ps::detect_kind(j) != ps::FileKind::embedding) throw ps::ParseError("split expects an embedding file");
    const ps::EmbeddingModel e = ps::embedding_from_json(j, std::filesystem::path(path).parent_path());
    std::vector<ps::Report> reports;
    reports.push_back(model_validation(e.ambient));
    reports.push_back(model_validation(e.sub));
    reports.push_back(ps::validate_embedding(e));
    for (const auto& r : reports)
        if (!r.passed()) return finish(reports, out);

    const ps::PrProjector pr = ps::build_p_r(e);
    reports.push_back(pr.report);
    const ps::SplitResult s = ps::split(e);
    reports.push_back(s.report);
    reports.push_back(ps::verify_pr_pushforward(e));
    reports.push_back(ps::verify_orthogonality(e, s));
    reports.push_back(ps::check_module_realization(e, ps::self_realization(e)));

    ps::Report table;
    table.subject = "fixed/variable ranks of '" + e.sub.name + "'";
    for (std::size_t k = 0; k <= e.sub.top(); ++k)
        table.add("degree " + std::to_string(k), true,
                  "fixed = " + std::to_string(s.dims[k].first) +
                      ", variable = " + std::to_string(s.dims[k].second));
    reports.push_back(table);

    if (out.as_json) {
        ps::json jout = ps::json::array();
        bool ok = true;
        for (const auto& r : reports) {
            jout.push_back(ps::report_to_json(r));
            ok = ok && r.passed();
        }
        // machine-readable projector blocks
        ps::json proj;
        for (std::size_t k = 0; k <= e.sub.top(); ++k) {
            if (e.sub.b(k) == 0) continue;
            proj["pi_fix"][std::to_string(k)] = ps::matrix_to_json(s.pi_fix.blocks[k]);
            proj["pi_var"][std::to_string(k)] = ps::matrix_to_json(s.pi_var.blocks[k]);
        }
        jout.push_back(std::move(proj));
        out.emit(jout.dump(2) + "\n");
        return ok ? 0 : 1;
    }
    return finish(reports, out);
}

int run_lift(const std::string& path, const Output& out) {
    const ps::json j = ps::load_json_file(path);
    if (ps::detect_kind(j) != ps::FileKind::algebra_element)
        throw ps::ParseError("lift expects an algebra-element file");
    const ps::AlgebraElement a = ps::algebra_element_from_json(j);
    std::vector<ps::Report> reports;
    const auto lift = ps::lift_idempotent(a);
    if (!lift) {
        ps::Report rep;
        rep.subject = "idempotent lift";
        rep.add("defect nilpotent", false, "e^2 - e is not nilpotent; element is not liftable");
        reports.push_back(std::move(rep));
        return finish(reports, out);
    }
    ps::Report head;
    head.subject = "idempotent lift";
    head.add("defect nilpotency index", true, "N = " + std::to_string(lift->defect_index));
    std::string poly = "P(t) =";
    for (std::size_t i = 0; i < lift->poly.size(); ++i)
        poly += (i ? " + (" : " (") + lift->poly[i].str() + ")t^" + std::to_string(i);
    head.add("lift polynomial", true, poly);
    reports.push_back(std::move(head));
    reports.push_back(lift->verification);

    if (out.as_json) {
        ps::json jout = ps::json::array();
        bool ok = true;
        for (const auto& r : reports) {
            jout.push_back(ps::report_to_json(r));
            ok = ok && r.passed();
        }
        ps::json extra;
        extra["lifted"] = ps::matrix_to_json(lift->lifted);
        jout.push_back(std::move(extra));
        out.emit(jout.dump(2) + "\n");
        return ok ? 0 : 1;
    }
    ps::Report mat;
    mat.subject = "lifted idempotent E";
    mat.add("E", true, ps::matrix_to_json(lift->lifted).dump());
    reports.push_back(std::move(mat));
    return finish(reports, out);
}

int run_equivariant(const std::string& action_path, const std::string& embedding_path,
                    const std::string& character, const Output& out) {
    const ps::json j = ps::load_json_file(action_path);
    if (ps::detect_kind(j) != ps::FileKind::action) throw ps::ParseError("equivariant expects an action file");
    const ps::ActionFile a =
        ps::action_file_from_json(j, std::filesystem::path(action_path).parent_path());
    std::vector<ps::Report> reports;
    reports.push_back(ps::validate_action(a.sub));
    if (!reports.back().passed()) return finish(reports, out);

    std::vector<std::pair<std::string, ps::CharacterDatum>> chars;
    if (!character.empty()) {
        auto it = a.characters.find(character);
        if (it == a.characters.end()) throw ps::ParseError("unknown character '" + character + "'");
        chars.emplace_back(it->first, it->second);
    } else {
        chars.assign(a.characters.begin(), a.characters.end());
    }
    if (chars.empty()) throw ps::ParseError("action file declares no characters");

    for (const auto& [name, chi] : chars) {
        ps::ChiProjector p = ps::projector_chi(a.sub, chi);
        p.report.subject += " [character '" + name + "']";
        ps::Report rep = p.report;
        for (std::size_t k = 0; k <= a.sub.model.top(); ++k)
            if (a.sub.model.b(k) > 0)
                rep.add("rank degree " + std::to_string(k), true,
                        std::to_string(ps::map_rank(p.map, k)));
        reports.push_back(std::move(rep));
    }

    if (!embedding_path.empty()) {
        if (!a.ambient)
            throw ps::ParseError("action file carries no ambient action; cannot refine the splitting");
        const ps::json je = ps::load_json_file(embedding_path);
        const ps::EmbeddingModel e =
            ps::embedding_from_json(je, std::filesystem::path(embedding_path).parent_path());
        for (const auto& [name, chi] : chars) {
            ps::EquivariantSplit es = ps::equivariant_split(e, a.sub, *a.ambient, chi);
            es.report.subject += " [character '" + name + "']";
            ps::Report rep = es.report;
            if (rep.passed())
                for (std::size_t k = 0; k <= e.sub.top(); ++k)
                    if (e.sub.b(k) > 0)
                        rep.add("ranks degree " + std::to_string(k), true,
                                "fix.chi = " + std::to_string(ps::map_rank(es.fix_chi, k)) +
                                    ", var.chi = " + std::to_string(ps::map_rank(es.var_chi, k)));
            reports.push_back(std::move(rep));
        }
    }
    return finish(reports, out);
}

int run_surface(const std::string& surface_path, const std::string& embedding_path, bool auto_split,
                const Output& out) {
    const ps::json j = ps::load_json_file(surface_path);
    if (ps::detect_kind(j) != ps::FileKind::surface) throw ps::ParseError("surface expects a surface file");
    const ps::SurfaceModel s = ps::surface_from_json(j);
    std::vector<ps::Report> reports;
    reports.push_back(model_validation(s.base));
    if (!reports.back().passed()) return finish(reports, out);

    ps::ChowLefschetzPieces pieces = ps::chow_lefschetz(s);
    {
        ps::Report rep = pieces.report;
        rep.add("pi2_alg rank", true, std::to_string(ps::map_rank(pieces.pi2_alg, 2)));
        rep.add("pi2_tr rank", true, std::to_string(ps::map_rank(pieces.pi2_tr, 2)));
        reports.push_back(std::move(rep));
    }
    if (!embedding_path.empty()) {
        const ps::json je = ps::load_json_file(embedding_path);
        const ps::EmbeddingModel e =
            ps::embedding_from_json(je, std::filesystem::path(embedding_path).parent_path());
        ps::ChowLefschetzPieces refined = ps::refine_with_splitting(s, e, auto_split);
        ps::Report rep = refined.report;
        rep.add("pi2_alg_fix rank", true, std::to_string(ps::map_rank(*refined.pi2_alg_fix, 2)));
        rep.add("pi2_alg_var rank", true, std::to_string(ps::map_rank(*refined.pi2_alg_var, 2)));
        rep.add("pi2_tr_fix rank", true, std::to_string(ps::map_rank(*refined.pi2_tr_fix, 2)));
        rep.add("pi2_tr_var rank", true, std::to_string(ps::map_rank(*refined.pi2_tr_var, 2)));
        reports.push_back(std::move(rep));
    }
    return finish(reports, out);
}

int run_gen(const std::string& name, std::size_t n, std::size_t d, std::uint64_t seed,
            std::size_t size, const std::string& profile, const Output& out) {
    ps::json j;
    if (name == "projective-space") {
        j = ps::model_to_json(ps::gen_projective_space(n));
    } else if (name == "product-p1p1") {
        j = ps::model_to_json(ps::gen_product_p1p1());
    } else if (name == "hypersurface-p3") {
        j = ps::model_to_json(ps::gen_hypersurface_p3(d));
    } else if (name == "jordan-strings") {
        std::vector<std::size_t> lengths;
        if (profile.empty()) {
            lengths = ps::jordan_profile_from_seed(seed, 40);
        } else {
            std::istringstream is(profile);
            std::string tok;
            while (std::getline(is, tok, ',')) lengths.push_back(std::stoul(tok));
        }
        j = ps::model_to_json(ps::gen_jordan_strings(seed, lengths).model);
    } else if (name == "ci-embedding") {
        j = ps::embedding_to_json(ps::gen_ci_embedding(d));
    } else if (name == "nilpotent-defect") {
        j = ps::algebra_element_to_json(ps::gen_nilpotent_defect(seed, size));
    } else if (name == "quadric-ruling-swap") {
        j = ps::action_file_to_json(ps::gen_quadric_ruling_swap());
    } else if (name == "quadric-surface") {
        const ps::CohomologyModel m = ps::gen_hypersurface_p3(2);
        j = ps::surface_to_json(ps::SurfaceModel{
            m, {{ps::Rational(1), ps::Rational(0)}, {ps::Rational(0), ps::Rational(1)}}});
    } else if (name == "quartic-surface") {
        const ps::CohomologyModel m = ps::gen_hypersurface_p3(4);
        ps::Vec h(m.b(2));
        h[0] = ps::Rational(1);
        j = ps::surface_to_json(ps::SurfaceModel{m, {h}});
    } else {
        throw ps::ParseError("unknown builtin '" + name +
                             "' (try: projective-space, product-p1p1, hypersurface-p3, "
                             "jordan-strings, ci-embedding, nilpotent-defect, quadric-ruling-swap, "
                             "quadric-surface, quartic-surface)");
    }
    out.emit(j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Lefschetz-type projector identities on rational "
                 "cohomology models"};
    app.require_subcommand(1);

    Output out;
    std::string file, embedding_path, character, gen_name, profile;
    std::size_t n = 2, d = 2, size = 4;
    std::uint64_t seed = 0;
    bool auto_split = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", out.as_json, "emit a machine-readable JSON report");
        cmd->add_option("--output", out.path, "write output to a file instead of stdout");
    };

    CLI::App* validate = app.add_subcommand("validate", "validate a model/embedding/action/... file");
    validate->add_option("file", file)->required();
    add_common(validate);

    CLI::App* lefschetz = app.add_subcommand("lefschetz", "hard Lefschetz, lambda, primitive pieces");
    lefschetz->add_option("file", file)->required();
    add_common(lefschetz);

    CLI::App* split = app.add_subcommand("split", "fixed/variable splitting of an embedding");
    split->add_option("file", file)->required();
    add_common(split);

    CLI::App* lift = app.add_subcommand("lift", "idempotent lift in a correspondence algebra");
    lift->add_option("file", file)->required();
    add_common(lift);

    CLI::App* equivariant = app.add_subcommand("equivariant", "isotypic projectors and equivariant splitting");
    equivariant->add_option("file", file)->required();
    equivariant->add_option("--embedding", embedding_path, "embedding file for the splitting refinement");
    equivariant->add_option("--character", character, "restrict to one named character");
    add_common(equivariant);

    CLI::App* surface = app.add_subcommand("surface", "Chow-Lefschetz pieces of a surface model");
    surface->add_option("file", file)->required();
    surface->add_option("--embedding", embedding_path, "refine along this embedding");
    surface->add_flag("--auto-split", auto_split, "split classes into fixed/variable components as needed");
    add_common(surface);

    CLI::App* gen = app.add_subcommand("gen", "write a builtin model/embedding/action file");
    gen->add_option("name", gen_name)->required();
    gen->add_option("--n", n, "projective-space dimension");
    gen->add_option("--d", d, "hypersurface degree");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--size", size, "matrix size for nilpotent-defect");
    gen->add_option("--profile", profile, "comma-separated odd string lengths for jordan-strings");
    add_common(gen);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(file, out);
        if (lefschetz->parsed()) return run_lefschetz(file, out);
        if (split->parsed()) return run_split(file, out);
        if (lift->parsed()) return run_lift(file, out);
        if (equivariant->parsed()) return run_equivariant(file, embedding_path, character, out);
        if (surface->parsed()) return run_surface(file, embedding_path, auto_split, out);
        if (gen->parsed()) return run_gen(gen_name, n, d, seed, size, profile, out);
    } catch (const ps::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ps::InternalError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
