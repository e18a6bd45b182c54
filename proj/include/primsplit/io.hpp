#pragma once

#include "primsplit/corr.hpp"
#include "primsplit/embedding.hpp"
#include "primsplit/equivariant.hpp"
#include "primsplit/model.hpp"
#include "primsplit/report.hpp"
#include "primsplit/surface.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace primsplit {

// Insertion-ordered objects keep serialization byte-stable.
using json = nlohmann::ordered_json;

/// Input problem (bad file, bad field, bad value) with a breadcrumb of where
/// it happened; distinct from verification failures.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json matrix_to_json(const Matrix& m);
/// Shape is taken from the data unless expected dimensions are given
/// (used to reconstruct zero-sized blocks, which serialize as []).
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json model_to_json(const CohomologyModel& m);
CohomologyModel model_from_json(const json& j);

json embedding_to_json(const EmbeddingModel& e);
/// `base_dir` resolves string file references in "ambient"/"sub".
EmbeddingModel embedding_from_json(const json& j, const std::filesystem::path& base_dir);

json algebra_element_to_json(const AlgebraElement& a);
AlgebraElement algebra_element_from_json(const json& j);

json surface_to_json(const SurfaceModel& s);
SurfaceModel surface_from_json(const json& j);

json action_file_to_json(const ActionFile& a);
ActionFile action_file_from_json(const json& j, const std::filesystem::path& base_dir);

json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

enum class FileKind { model, embedding, action, algebra_element, surface };
FileKind detect_kind(const json& j);
std::string kind_name(FileKind k);

json load_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace primsplit
