#include "wedderburn/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "wedderburn/errors.hpp"

namespace wedderburn::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::io, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

Index to_index(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<Index>();
}

double to_double(const json& j) {
  if (!j.is_number()) fail("matrix entries must be numbers");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail("matrix entries must be finite");
  return v;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const Index rows = to_index(field(j, "rows"), "rows");
  const Index cols = to_index(field(j, "cols"), "cols");
  const json& entries = field(j, "entries");
  if (rows < 1 || cols < 1) fail("matrix dimensions must be positive");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != rows * cols) {
    fail("entries length must equal rows * cols");
  }
  ComplexMatrix m(rows, cols);
  for (Index k = 0; k < rows * cols; ++k) {
    const json& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2) fail("each entry must be a [re, im] pair");
    m(k / cols, k % cols) = Complex(to_double(e[0]), to_double(e[1]));
  }
  return m;
}

json structure_to_json(const std::vector<BlockShape>& structure) {
  json out = json::array();
  for (const auto& s : structure) out.push_back({s.p, s.q});
  return out;
}

std::vector<BlockShape> structure_from_json(const json& j) {
  if (!j.is_array()) fail("structure must be an array of [p, q] pairs");
  std::vector<BlockShape> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) fail("structure entries must be [p, q] pairs");
    out.push_back({to_index(pair[0], "p"), to_index(pair[1], "q")});
  }
  return out;
}

std::vector<BlockShape> parse_structure(const std::string& text) {
  std::vector<BlockShape> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto x = token.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == token.size()) fail("bad structure token '" + token + "'");
    BlockShape s;
    std::size_t used_p = 0;
    std::size_t used_q = 0;
    try {
      s.p = std::stol(token.substr(0, x), &used_p);
      s.q = std::stol(token.substr(x + 1), &used_q);
    } catch (const std::exception&) {
      fail("bad structure token '" + token + "'");
    }
    if (used_p != x || used_q != token.size() - x - 1 || s.p < 1 || s.q < 1) {
      fail("bad structure token '" + token + "'");
    }
    out.push_back(s);
  }
  if (out.empty() || text.back() == ',') fail("structure must contain at least one <p>x<q> token");
  return out;
}

json report_to_json(const VerificationReport& report) {
  return {
      {"unitarity_residual", report.unitarity_residual},
      {"max_block_residual", report.max_block_residual},
      {"projector_image_residual", report.projector_image_residual},
      {"dimension_identity",
       {{"holds", report.dimension_identity},
        {"algebra_dim", report.algebra_dim},
        {"sum_p_squared", report.sum_p_squared}}},
      {"structure", structure_to_json(report.structure)},
      {"passed", report.passed},
  };
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.unitarity_residual = field(j, "unitarity_residual").get<double>();
  r.max_block_residual = field(j, "max_block_residual").get<double>();
  r.projector_image_residual = field(j, "projector_image_residual").get<double>();
  const json& dim = field(j, "dimension_identity");
  r.dimension_identity = field(dim, "holds").get<bool>();
  r.algebra_dim = to_index(field(dim, "algebra_dim"), "algebra_dim");
  r.sum_p_squared = to_index(field(dim, "sum_p_squared"), "sum_p_squared");
  r.structure = structure_from_json(field(j, "structure"));
  r.passed = field(j, "passed").get<bool>();
  return r;
}

json to_json(const GeneratorFile& file) {
  json gens = json::array();
  for (const auto& g : file.generators) gens.push_back(matrix_to_json(g));
  json out = {{"dim", file.dim}, {"generators", std::move(gens)}};
  json meta = json::object();
  const auto& m = file.metadata;
  if (m.name) meta["name"] = *m.name;
  if (m.seed) meta["seed"] = *m.seed;
  if (m.num_generators) meta["num_generators"] = *m.num_generators;
  if (m.structure) meta["structure"] = structure_to_json(*m.structure);
  if (m.expected_structure) meta["expected_structure"] = structure_to_json(*m.expected_structure);
  if (!meta.empty()) out["metadata"] = std::move(meta);
  return out;
}

GeneratorFile generator_file_from_json(const json& j) {
  GeneratorFile file;
  file.dim = to_index(field(j, "dim"), "dim");
  if (file.dim < 1) fail("dim must be positive");
  const json& gens = field(j, "generators");
  if (!gens.is_array()) fail("generators must be an array");
  for (const auto& g : gens) {
    ComplexMatrix m = matrix_from_json(g);
    if (m.rows() != file.dim || m.cols() != file.dim) fail("every generator must be dim x dim");
    file.generators.push_back(std::move(m));
  }
  if (j.contains("metadata")) {
    const json& meta = j.at("metadata");
    if (!meta.is_object()) fail("metadata must be an object");
    auto& m = file.metadata;
    if (meta.contains("name")) m.name = meta.at("name").get<std::string>();
    if (meta.contains("seed")) m.seed = meta.at("seed").get<std::uint64_t>();
    if (meta.contains("num_generators")) m.num_generators = to_index(meta.at("num_generators"), "num_generators");
    if (meta.contains("structure")) m.structure = structure_from_json(meta.at("structure"));
    if (meta.contains("expected_structure")) m.expected_structure = structure_from_json(meta.at("expected_structure"));
  }
  return file;
}

json to_json(const DecompositionFile& file) {
  const auto& t = file.tolerances;
  return {
      {"dim", file.claim.dim_h},
      {"structure", structure_to_json(file.claim.structure)},
      {"u", matrix_to_json(file.claim.global_u)},
      {"block_offsets", file.claim.block_offsets},
      {"tolerances", {{"tol_zero", t.tol_zero}, {"tol_rel", t.tol_rel}, {"tol_eig_cluster", t.tol_eig_cluster}}},
      {"report", report_to_json(file.report)},
  };
}

DecompositionFile decomposition_file_from_json(const json& j) {
  DecompositionFile file;
  file.claim.structure = structure_from_json(field(j, "structure"));
  file.claim.global_u = matrix_from_json(field(j, "u"));
  file.claim.dim_h = j.contains("dim") ? to_index(j.at("dim"), "dim") : file.claim.global_u.rows();
  const json& offsets = field(j, "block_offsets");
  if (!offsets.is_array()) fail("block_offsets must be an array");
  for (const auto& o : offsets) file.claim.block_offsets.push_back(to_index(o, "block offset"));
  Index total = 0;
  for (const auto& s : file.claim.structure) total += s.p * s.q;
  if (total != file.claim.global_u.rows() || file.claim.global_u.rows() != file.claim.global_u.cols()) {
    fail("sum of p*q must equal the dimension of a square u");
  }
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    file.tolerances.tol_zero = field(t, "tol_zero").get<double>();
    file.tolerances.tol_rel = field(t, "tol_rel").get<double>();
    file.tolerances.tol_eig_cluster = field(t, "tol_eig_cluster").get<double>();
  }
  if (j.contains("report")) file.report = report_from_json(j.at("report"));
  return file;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail("cannot parse '" + path.string() + "': " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail("cannot write '" + path.string() + "'");
  out << text;
  if (!out) fail("write failed for '" + path.string() + "'");
}

}  // namespace wedderburn::io
