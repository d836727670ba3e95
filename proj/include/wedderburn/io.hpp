#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wedderburn/verify.hpp"

namespace wedderburn::io {

using nlohmann::json;

/// {"rows", "cols", "entries": [[re, im], ...]} with entries row-major.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json structure_to_json(const std::vector<BlockShape>& structure);
std::vector<BlockShape> structure_from_json(const json& j);

/// Comma-separated "<p>x<q>" tokens, e.g. "2x3,1x4". Throws an io error on
/// bad syntax.
std::vector<BlockShape> parse_structure(const std::string& text);

struct GeneratorMetadata {
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
  std::optional<Index> num_generators;
  std::optional<std::vector<BlockShape>> structure;
  std::optional<std::vector<BlockShape>> expected_structure;
};

struct GeneratorFile {
  Index dim = 0;
  std::vector<ComplexMatrix> generators;
  GeneratorMetadata metadata;
};

struct DecompositionFile {
  ClaimedDecomposition claim;
  ToleranceConfig tolerances;
  VerificationReport report;
};

json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const json& j);

json to_json(const GeneratorFile& file);
GeneratorFile generator_file_from_json(const json& j);

json to_json(const DecompositionFile& file);
DecompositionFile decomposition_file_from_json(const json& j);

/// Pretty-printed with a trailing newline. Doubles use the shortest
/// representation that round-trips bitwise.
std::string dump(const json& j);

json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace wedderburn::io
