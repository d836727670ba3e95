#include "wedderburn/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "wedderburn/errors.hpp"
#include "wedderburn/instance_gen.hpp"
#include "wedderburn/io.hpp"

namespace wedderburn::cli {

namespace {

void print_structure(const std::vector<BlockShape>& structure, std::ostream& out) {
  for (std::size_t k = 0; k < structure.size(); ++k) {
    out << k << ": p=" << structure[k].p << " q=" << structure[k].q << "\n";
  }
}

int report_error(const Error& e, std::ostream& err) {
  err << "error";
  if (!e.stage().empty()) err << " [stage " << e.stage() << "]";
  err << " (" << to_string(e.kind()) << "): " << e.what() << "\n";
  return e.kind() == ErrorKind::io ? kIoError : kStructuralError;
}

struct DecomposeArgs {
  std::string input;
  std::string output;
  std::optional<double> tol;
  bool json_report = false;
};

struct GenerateArgs {
  std::string structure;
  std::string named;
  std::uint64_t seed = 0;
  Index num_gens = 2;
  std::string output;
};

struct VerifyArgs {
  std::string generators;
  std::string decomposition;
  std::optional<double> tol;
};

int run_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err) {
  const io::GeneratorFile gens = io::generator_file_from_json(io::read_json(args.input));
  const ToleranceConfig tol = args.tol ? ToleranceConfig::scaled(*args.tol) : ToleranceConfig{};

  const WedderburnDecomposition d = decompose(gens.generators, gens.dim, tol);
  const VerificationReport report = verify_decomposition(gens.generators, d, tol);

  io::DecompositionFile file{claim_of(d), tol, report};
  io::write_text(args.output, io::dump(io::to_json(file)));

  print_structure(d.structure, out);
  if (args.json_report) out << io::dump(io::report_to_json(report));
  if (!report.passed) {
    err << "verification failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

int run_generate(const GenerateArgs& args, std::ostream&, std::ostream&) {
  io::GeneratorFile file;
  if (!args.named.empty()) {
    const NamedInstance inst = named_instance(args.named);
    file.dim = inst.dim_h;
    file.generators = inst.generators;
    file.metadata.name = inst.name;
    file.metadata.expected_structure = inst.expected_structure;
  } else {
    const auto structure = io::parse_structure(args.structure);
    if (args.num_gens < 1) throw Error(ErrorKind::io, "--num-gens must be >= 1");
    const PlantedInstance inst = generate_planted(structure, args.num_gens, args.seed);
    file.dim = inst.dim_h();
    file.generators = inst.generators;
    file.metadata.seed = args.seed;
    file.metadata.num_generators = args.num_gens;
    file.metadata.structure = structure;
    file.metadata.expected_structure = canonical_structure(structure);
  }
  io::write_text(args.output, io::dump(io::to_json(file)));
  return kOk;
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const io::GeneratorFile gens = io::generator_file_from_json(io::read_json(args.generators));
  const io::DecompositionFile file = io::decomposition_file_from_json(io::read_json(args.decomposition));
  if (file.claim.dim_h != gens.dim) {
    throw Error(ErrorKind::io, "generator and decomposition files disagree on the dimension");
  }
  ToleranceConfig tol = args.tol ? ToleranceConfig::scaled(*args.tol) : file.tolerances;
  tol.validate();
  const VerificationReport report = verify_decomposition(gens.generators, file.claim, tol);
  out << io::dump(io::report_to_json(report));
  if (!report.passed) {
    err << "verification failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block decomposition of finite-dimensional matrix *-algebras"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose the algebra generated by a generator file");
  decompose_cmd->add_option("--input", dec.input, "Generator file (JSON)")->required();
  decompose_cmd->add_option("--output", dec.output, "Decomposition file to write (JSON)")->required();
  decompose_cmd->add_option("--tol", dec.tol, "Relative tolerance (scales the eigenvalue cluster gap too)")
      ->check(CLI::PositiveNumber);
  decompose_cmd->add_flag("--json-report", dec.json_report, "Also print the verification report as JSON");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generator file");
  auto* structure_opt = generate_cmd->add_option("--structure", gen.structure, "Planted blocks, e.g. 2x3,1x4");
  auto* named_opt = generate_cmd->add_option("--named", gen.named, "Catalog instance name");
  structure_opt->excludes(named_opt);
  generate_cmd->add_option("--seed", gen.seed, "Random seed");
  generate_cmd->add_option("--num-gens", gen.num_gens, "Number of generators for planted instances");
  generate_cmd->add_option("--output", gen.output, "Generator file to write (JSON)")->required();

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition file against its generators");
  verify_cmd->add_option("--generators", ver.generators, "Generator file (JSON)")->required();
  verify_cmd->add_option("--decomposition", ver.decomposition, "Decomposition file (JSON)")->required();
  verify_cmd->add_option("--tol", ver.tol, "Relative tolerance override")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoError;
  }

  try {
    if (*decompose_cmd) return run_decompose(dec, out, err);
    if (*generate_cmd) {
      if (gen.structure.empty() == gen.named.empty()) {
        err << "generate: exactly one of --structure or --named is required\n";
        return kIoError;
      }
      return run_generate(gen, out, err);
    }
    return run_verify(ver, out, err);
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const nlohmann::json::exception& e) {
    err << "error (io): " << e.what() << "\n";
    return kIoError;
  }
}

}  // namespace wedderburn::cli
