#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nonsep/genericity.hpp"

namespace nonsep {

// Sweep configuration. File syntax: one `key = value` pair per line,
// comments from '#' to end of line, lists comma separated. Required keys:
// dims (two factors), epsilons, samples. Optional: components (default 4),
// seed (default 0), out (may instead arrive on the command line).
struct ExperimentConfig {
  std::vector<int> dims;
  std::vector<double> epsilons;
  int samples = 0;
  int components = 4;
  std::uint64_t seed = 0;
  std::string output_path;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig read_config_file(const std::string& path);

// One sweep result row. `seed` is the derived per-sample stream, not the
// base seed from the config.
struct SweepRow {
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  double achieved_distance = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  double negativity = 0.0;
  double min_pt_eigenvalue = 0.0;
  bool input_ball_check = false;
};

// Runs samples x epsilons perturbations on freshly sampled separable inputs.
// Row order is (seed, epsilon) lexicographic; identical configs produce
// identical rows.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config);

inline constexpr const char* kSweepCsvHeader =
    "seed,epsilon,achieved_distance,verdict,negativity,min_pt_eig,input_ball_check";

// Renders rows as CSV. With `with_timestamp`, a `# generated <UTC time>`
// comment line precedes the header.
std::string render_csv(const std::vector<SweepRow>& rows, bool with_timestamp);

}  // namespace nonsep
