#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nonsep/experiment.hpp"
#include "nonsep/io.hpp"

namespace {

// Exit codes: 0 success, 2 parse or usage error, 3 domain invariant
// violation (non-density input, impossible dimensions, and the like).
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

int run_perturb(const std::string& path, double epsilon, std::uint64_t seed) {
  const nonsep::MatrixFile file = nonsep::read_matrix_file(path);
  const nonsep::DensityOperator input(file.dims, file.matrix);
  const nonsep::EntanglingResult result = nonsep::entangling_perturbation(input, epsilon, seed);
  const auto& record = result.record;
  std::cout << "achieved_distance=" << nonsep::format_double(record.achieved_trace_distance)
            << " verdict=" << nonsep::to_string(record.report.verdict)
            << " negativity=" << nonsep::format_double(record.report.negativity)
            << " enlarged_dims=" << record.enlarged_dims[0] << "x" << record.enlarged_dims[1]
            << "\n";
  return kExitOk;
}

int run_witness(const std::string& path) {
  const nonsep::MatrixFile file = nonsep::read_matrix_file(path);
  const nonsep::DensityOperator input(file.dims, file.matrix);
  const nonsep::WitnessReport report = nonsep::witness(input);
  std::cout << nonsep::to_string(report.verdict)
            << " negativity=" << nonsep::format_double(report.negativity)
            << " min_pt_eig=" << nonsep::format_double(report.min_pt_eigenvalue) << "\n";
  return kExitOk;
}

int run_sweep_command(const std::string& config_path, const std::string& out_override,
                      bool no_timestamp) {
  nonsep::ExperimentConfig config = nonsep::read_config_file(config_path);
  if (!out_override.empty()) {
    config.output_path = out_override;
  }
  if (config.output_path.empty()) {
    throw nonsep::ParseError("sweep: no output path (config key 'out' or flag --out)");
  }
  // All rows are computed before the file is opened, so a failed run never
  // leaves partial output behind; a failed write removes the file.
  const std::vector<nonsep::SweepRow> rows = nonsep::run_sweep(config);
  const std::string csv = nonsep::render_csv(rows, !no_timestamp);
  std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << csv) || !out.flush()) {
    out.close();
    std::error_code ec;
    std::filesystem::remove(config.output_path, ec);
    throw nonsep::ParseError("sweep: cannot write output file '" + config.output_path + "'");
  }
  std::cout << "wrote " << rows.size() << " rows to " << config.output_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Entangling perturbations and separability certification for bipartite states at finite "
      "truncation"};
  app.require_subcommand(1);

  std::string matrix_path;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  auto* perturb = app.add_subcommand(
      "perturb", "Produce a nonseparable state within epsilon of the input density operator");
  perturb->add_option("file", matrix_path, "Matrix file holding the input density operator")
      ->required();
  perturb->add_option("--epsilon", epsilon, "Trace-distance budget")
      ->required()
      ->check(CLI::PositiveNumber);
  perturb->add_option("--seed", seed, "Stream annotation recorded with the result");

  std::string witness_path;
  auto* witness_cmd =
      app.add_subcommand("witness", "Run the partial-transpose witness on a density operator");
  witness_cmd->add_option("file", witness_path, "Matrix file holding the density operator")
      ->required();

  std::string config_path;
  std::string out_override;
  bool no_timestamp = false;
  auto* sweep = app.add_subcommand("sweep", "Run a seeded perturbation sweep and write a CSV");
  sweep->add_option("--config", config_path, "Sweep configuration file")->required();
  sweep->add_option("--out", out_override, "Output CSV path (overrides the config)");
  sweep->add_flag("--no-timestamp", no_timestamp, "Omit the generation-time comment line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (app.got_subcommand(perturb)) {
      return run_perturb(matrix_path, epsilon, seed);
    }
    if (app.got_subcommand(witness_cmd)) {
      return run_witness(witness_path);
    }
    return run_sweep_command(config_path, out_override, no_timestamp);
  } catch (const nonsep::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nonsep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
