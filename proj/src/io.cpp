#include "primsplit/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace primsplit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::size_t need_count(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_unsigned()) fail(where, std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

} // namespace

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) fail("rational", "expected a \"p/q\" string, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail("rational", e.what());
    } catch (const std::domain_error& e) {
        fail("rational", e.what());
    }
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) fail("matrix", "expected an array of rows");
    if (j.empty()) {
        if (rows != 0 && cols != 0) fail("matrix", "empty matrix where a nonempty one was expected");
        return Matrix(rows, cols);
    }
    const std::size_t nr = j.size();
    if (rows != SIZE_MAX && nr != rows)
        fail("matrix", "expected " + std::to_string(rows) + " rows, got " + std::to_string(nr));
    std::size_t nc = SIZE_MAX;
    Matrix m;
    for (std::size_t i = 0; i < nr; ++i) {
        const json& row = j[i];
        if (!row.is_array()) fail("matrix", "row " + std::to_string(i) + " is not an array");
        if (nc == SIZE_MAX) {
            nc = row.size();
            if (cols != SIZE_MAX && nc != cols)
                fail("matrix", "expected " + std::to_string(cols) + " columns, got " + std::to_string(nc));
            m = Matrix(nr, nc);
        }
        if (row.size() != nc) fail("matrix", "ragged row " + std::to_string(i));
        for (std::size_t c = 0; c < nc; ++c) m.at(i, c) = rational_from_json(row[c]);
    }
    return m;
}

json model_to_json(const CohomologyModel& m) {
    json j;
    j["name"] = m.name;
    j["dim"] = m.dim;
    j["betti"] = m.betti;
    json pairing = json::object();
    for (std::size_t k = 0; k <= m.top(); ++k)
        if (!m.pairing[k].empty_shape()) pairing[std::to_string(k)] = matrix_to_json(m.pairing[k]);
    j["pairing"] = std::move(pairing);
    json lef = json::object();
    for (std::size_t k = 0; k + 2 <= m.top(); ++k)
        if (!m.lefschetz[k].empty_shape()) lef[std::to_string(k)] = matrix_to_json(m.lefschetz[k]);
    j["lefschetz"] = std::move(lef);
    return j;
}

CohomologyModel model_from_json(const json& j) {
    const std::string where = "model";
    CohomologyModel m;
    m.name = need(j, "name", where).is_string() ? j["name"].get<std::string>() : "";
    m.dim = need_count(j, "dim", where);
    const json& betti = need(j, "betti", where);
    if (!betti.is_array()) fail(where, "'betti' must be an array");
    for (const json& b : betti) {
        if (!b.is_number_unsigned()) fail(where, "'betti' entries must be non-negative integers");
        m.betti.push_back(b.get<std::size_t>());
    }
    const std::size_t top = 2 * m.dim;
    if (m.betti.size() != top + 1)
        fail(where, "'betti' must have " + std::to_string(top + 1) + " entries");
    const json& pairing = need(j, "pairing", where);
    m.pairing.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        const std::string key = std::to_string(k);
        if (pairing.contains(key))
            m.pairing[k] = matrix_from_json(pairing[key], m.b(k), m.b(top - k));
        else if (m.b(k) == 0 || m.b(top - k) == 0)
            m.pairing[k] = Matrix(m.b(k), m.b(top - k));
        else
            fail(where, "missing pairing block for degree " + key);
    }
    const json& lef = need(j, "lefschetz", where);
    if (top >= 2) {
        m.lefschetz.resize(top - 1);
        for (std::size_t k = 0; k + 2 <= top; ++k) {
            const std::string key = std::to_string(k);
            if (lef.contains(key))
                m.lefschetz[k] = matrix_from_json(lef[key], m.b(k + 2), m.b(k));
            else if (m.b(k) == 0 || m.b(k + 2) == 0)
                m.lefschetz[k] = Matrix(m.b(k + 2), m.b(k));
            else
                fail(where, "missing lefschetz block for degree " + key);
        }
    }
    return m;
}

namespace {

CohomologyModel model_or_ref(const json& j, const std::filesystem::path& base_dir,
                             const std::string& where) {
    if (j.is_string()) {
        const std::filesystem::path p = base_dir / j.get<std::string>();
        return model_from_json(load_json_file(p));
    }
    if (j.is_object()) return model_from_json(j);
    fail(where, "expected an inline model or a file reference string");
}

GradedMap graded_map_from_json(const json& j, const CohomologyModel& source,
                               const CohomologyModel& target, int shift, const std::string& where) {
    GradedMap g;
    g.shift = shift;
    g.target_betti = target.betti;
    g.blocks.resize(source.top() + 1);
    for (std::size_t k = 0; k <= source.top(); ++k) {
        const long tk = static_cast<long>(k) + shift;
        const std::size_t tb =
            (tk >= 0 && tk <= static_cast<long>(target.top())) ? target.b(static_cast<std::size_t>(tk)) : 0;
        const std::string key = std::to_string(k);
        if (j.contains(key))
            g.blocks[k] = matrix_from_json(j[key], tb, source.b(k));
        else if (tb == 0 || source.b(k) == 0)
            g.blocks[k] = Matrix(tb, source.b(k));
        else
            fail(where, "missing block for degree " + key);
    }
    return g;
}

json graded_map_to_json(const GradedMap& g) {
    json j = json::object();
    for (std::size_t k = 0; k < g.blocks.size(); ++k)
        if (!g.blocks[k].empty_shape()) j[std::to_string(k)] = matrix_to_json(g.blocks[k]);
    return j;
}

} // namespace

json embedding_to_json(const EmbeddingModel& e) {
    json j;
    j["ambient"] = model_to_json(e.ambient);
    j["sub"] = model_to_json(e.sub);
    j["codim"] = e.codim;
    j["pullback"] = graded_map_to_json(e.pullback);
    j["pushforward"] = graded_map_to_json(e.pushforward);
    return j;
}

EmbeddingModel embedding_from_json(const json& j, const std::filesystem::path& base_dir) {
    const std::string where = "embedding";
    EmbeddingModel e;
    e.ambient = model_or_ref(need(j, "ambient", where), base_dir, where + ".ambient");
    e.sub = model_or_ref(need(j, "sub", where), base_dir, where + ".sub");
    e.codim = need_count(j, "codim", where);
    e.pullback = graded_map_from_json(need(j, "pullback", where), e.ambient, e.sub, 0,
                                      where + ".pullback");
    e.pushforward = graded_map_from_json(need(j, "pushforward", where), e.sub, e.ambient,
                                         static_cast<int>(2 * e.codim), where + ".pushforward");
    return e;
}

json algebra_element_to_json(const AlgebraElement& a) {
    json j;
    j["size"] = a.mat.rows();
    j["matrix"] = matrix_to_json(a.mat);
    j["degree"] = a.degree;
    j["realization_basis"] = matrix_to_json(a.realization_basis);
    return j;
}

AlgebraElement algebra_element_from_json(const json& j) {
    const std::string where = "algebra element";
    AlgebraElement a;
    const std::size_t n = need_count(j, "size", where);
    a.mat = matrix_from_json(need(j, "matrix", where), n, n);
    const json& deg = need(j, "degree", where);
    if (!deg.is_number_integer()) fail(where, "'degree' must be an integer");
    a.degree = deg.get<int>();
    a.realization_basis = matrix_from_json(need(j, "realization_basis", where), n, n);
    return a;
}

json surface_to_json(const SurfaceModel& s) {
    json j = model_to_json(s.base);
    json classes = json::array();
    for (const Vec& c : s.algebraic_classes) {
        json row = json::array();
        for (const Rational& x : c) row.push_back(rational_to_json(x));
        classes.push_back(std::move(row));
    }
    j["algebraic_classes"] = std::move(classes);
    return j;
}

SurfaceModel surface_from_json(const json& j) {
    SurfaceModel s;
    s.base = model_from_json(j);
    const json& classes = need(j, "algebraic_classes", "surface");
    if (!classes.is_array()) fail("surface", "'algebraic_classes' must be an array");
    for (const json& row : classes) {
        if (!row.is_array() || row.size() != s.base.b(2))
            fail("surface", "each algebraic class needs " + std::to_string(s.base.b(2)) + " coordinates");
        Vec c;
        for (const json& x : row) c.push_back(rational_from_json(x));
        s.algebraic_classes.push_back(std::move(c));
    }
    return s;
}

namespace {

json group_action_maps_to_json(const GroupAction& a) {
    json maps = json::object();
    for (std::size_t i = 0; i < a.group.order(); ++i)
        maps[a.group.elements[i]] = graded_map_to_json(a.action[i]);
    return maps;
}

std::vector<GradedMap> group_action_maps_from_json(const json& j, const GroupSpec& g,
                                                   const CohomologyModel& m, const std::string& where) {
    std::vector<GradedMap> action;
    for (const std::string& name : g.elements) {
        if (!j.contains(name)) fail(where, "missing action for element '" + name + "'");
        action.push_back(graded_map_from_json(j[name], m, m, 0, where + "." + name));
    }
    return action;
}

} // namespace

json action_file_to_json(const ActionFile& a) {
    json j;
    j["model"] = model_to_json(a.sub.model);
    j["elements"] = a.sub.group.elements;
    j["table"] = a.sub.group.table;
    j["action"] = group_action_maps_to_json(a.sub);
    json chars = json::object();
    for (const auto& [name, chi] : a.characters) {
        json vals = json::object();
        for (std::size_t i = 0; i < a.sub.group.order(); ++i)
            vals[a.sub.group.elements[i]] = rational_to_json(chi.values[i]);
        chars[name] = std::move(vals);
    }
    j["characters"] = std::move(chars);
    if (a.ambient) {
        j["ambient_model"] = model_to_json(a.ambient->model);
        j["ambient_action"] = group_action_maps_to_json(*a.ambient);
    }
    return j;
}

ActionFile action_file_from_json(const json& j, const std::filesystem::path& base_dir) {
    const std::string where = "action";
    ActionFile a;
    a.sub.model = model_or_ref(need(j, "model", where), base_dir, where + ".model");
    const json& elements = need(j, "elements", where);
    if (!elements.is_array() || elements.empty()) fail(where, "'elements' must be a nonempty array");
    for (const json& e : elements) {
        if (!e.is_string()) fail(where, "'elements' must contain strings");
        a.sub.group.elements.push_back(e.get<std::string>());
    }
    const std::size_t n = a.sub.group.elements.size();
    const json& table = need(j, "table", where);
    if (!table.is_array() || table.size() != n) fail(where, "'table' must be a " + std::to_string(n) + "-row array");
    for (const json& row : table) {
        if (!row.is_array() || row.size() != n) fail(where, "'table' rows must have length " + std::to_string(n));
        std::vector<std::size_t> r;
        for (const json& v : row) {
            if (!v.is_number_unsigned() || v.get<std::size_t>() >= n)
                fail(where, "'table' entries must be element indices");
            r.push_back(v.get<std::size_t>());
        }
        a.sub.group.table.push_back(std::move(r));
    }
    a.sub.action = group_action_maps_from_json(need(j, "action", where), a.sub.group, a.sub.model,
                                               where + ".action");
    if (j.contains("characters")) {
        const json& chars = j["characters"];
        if (!chars.is_object()) fail(where, "'characters' must be an object");
        for (auto it = chars.begin(); it != chars.end(); ++it) {
            CharacterDatum chi;
            for (const std::string& name : a.sub.group.elements) {
                if (!it.value().contains(name))
                    fail(where, "character '" + it.key() + "' missing value for '" + name + "'");
                chi.values.push_back(rational_from_json(it.value()[name]));
            }
            a.characters[it.key()] = std::move(chi);
        }
    }
    if (j.contains("ambient_model") != j.contains("ambient_action"))
        fail(where, "'ambient_model' and 'ambient_action' must come together");
    if (j.contains("ambient_model")) {
        GroupAction amb;
        amb.group = a.sub.group;
        amb.model = model_or_ref(j["ambient_model"], base_dir, where + ".ambient_model");
        amb.action = group_action_maps_from_json(j["ambient_action"], amb.group, amb.model,
                                                 where + ".ambient_action");
        a.ambient = std::move(amb);
    }
    return a;
}

json report_to_json(const Report& r) {
    json j;
    j["command"] = r.subject;
    json checks = json::array();
    for (const Check& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["status"] = c.status == CheckStatus::pass ? "pass" : c.status == CheckStatus::fail ? "fail" : "skip";
        if (!c.details.empty()) e["details"] = c.details;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["overall"] = r.passed() ? "pass" : "fail";
    return j;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << r.subject << "\n";
    for (const Check& c : r.checks) {
        const char* tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "skip";
        os << "  [" << tag << "] " << c.name;
        if (!c.details.empty()) os << " -- " << c.details;
        os << "\n";
    }
    os << (r.passed() ? "overall: PASS" : "overall: FAIL") << "\n";
    return os.str();
}

FileKind detect_kind(const json& j) {
    if (!j.is_object()) throw ParseError("top level: expected a JSON object");
    if (j.contains("pullback") || j.contains("pushforward")) return FileKind::embedding;
    if (j.contains("elements") || j.contains("action")) return FileKind::action;
    if (j.contains("realization_basis")) return FileKind::algebra_element;
    if (j.contains("algebraic_classes")) return FileKind::surface;
    if (j.contains("betti")) return FileKind::model;
    throw ParseError("top level: unrecognized file kind");
}

std::string kind_name(FileKind k) {
    switch (k) {
    case FileKind::model: return "model";
    case FileKind::embedding: return "embedding";
    case FileKind::action: return "action";
    case FileKind::algebra_element: return "algebra element";
    case FileKind::surface: return "surface";
    }
    return "?";
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path.string() + "': " + e.what());
    }
    return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out << text;
}

} // namespace primsplit
