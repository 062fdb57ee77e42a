#include "nonsep/experiment.hpp"

#include <doctest.h>

#include <set>
#include <string>

#include "nonsep/rng.hpp"

using namespace nonsep;

namespace {

const char* kGoodConfig =
    "# sweep over two budgets\n"
    "dims = 2, 2\n"
    "epsilons = 0.5, 0.1\n"
    "samples = 3\n"
    "components = 2\n"
    "seed = 9\n"
    "out = sweep.csv  # relative to the working directory\n";

}  // namespace

TEST_CASE("parse_config_text reads keys, lists, and comments") {
  const ExperimentConfig config = parse_config_text(kGoodConfig);
  CHECK(config.dims == std::vector<int>{2, 2});
  CHECK(config.epsilons == std::vector<double>{0.5, 0.1});
  CHECK(config.samples == 3);
  CHECK(config.components == 2);
  CHECK(config.seed == 9);
  CHECK(config.output_path == "sweep.csv");
}

TEST_CASE("parse_config_text applies defaults for optional keys") {
  const ExperimentConfig config =
      parse_config_text("dims = 3,2\nepsilons = 0.25\nsamples = 1\n");
  CHECK(config.components == 4);
  CHECK(config.seed == 0);
  CHECK(config.output_path.empty());
}

TEST_CASE("parse_config_text rejects broken configs") {
  CHECK_THROWS_AS(parse_config_text("epsilons = 0.1\nsamples = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("dims = 2,2\nsamples = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("dims = 2,2\nepsilons = 0.1\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("dims = 2,2\nepsilons =\nsamples = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("dims = 2,2\nepsilons = 0.1, -0.2\nsamples = 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_config_text("dims = 2,2\nepsilons = 0.1\nsamples = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("dims = 2,2\nepsilons = 0.1\nsamples = 1\nbudget = 3\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_config_text("dims = 2,2\ndims = 2,2\nepsilons = 0.1\nsamples = 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_config_text("dims 2,2\nepsilons = 0.1\nsamples = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("dims = 2,x\nepsilons = 0.1\nsamples = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("dims = 2\nepsilons = 0.1\nsamples = 1\n"), ParseError);
}

TEST_CASE("run_sweep produces one ordered row per sample and epsilon") {
  const ExperimentConfig config = parse_config_text(kGoodConfig);
  const std::vector<SweepRow> rows = run_sweep(config);
  REQUIRE(rows.size() == 6);
  std::set<std::uint64_t> seeds;
  for (size_t i = 0; i < rows.size(); ++i) {
    seeds.insert(rows[i].seed);
    CHECK(rows[i].achieved_distance < rows[i].epsilon);
    CHECK(rows[i].verdict != Verdict::SeparableCertified);
    if (i > 0) {
      const bool ordered = rows[i - 1].seed < rows[i].seed ||
                           (rows[i - 1].seed == rows[i].seed &&
                            rows[i - 1].epsilon <= rows[i].epsilon);
      CHECK(ordered);
    }
  }
  // One derived stream per sample, shared by its epsilon rows.
  CHECK(seeds.size() == 3);
  for (int sample = 0; sample < 3; ++sample) {
    CHECK(seeds.count(derive_stream(9, static_cast<std::uint64_t>(sample))) == 1);
  }
  // The ball flag reports on the sampled input, recomputed here directly.
  for (const auto& row : rows) {
    const DensityOperator input = sample_separable(config.dims, config.components, row.seed);
    CHECK(row.input_ball_check == separable_ball_check(input));
  }
}

TEST_CASE("run_sweep is deterministic for a fixed config") {
  const ExperimentConfig config = parse_config_text(kGoodConfig);
  const std::string first = render_csv(run_sweep(config), false);
  const std::string second = render_csv(run_sweep(config), false);
  CHECK(first == second);
}

TEST_CASE("render_csv emits the pinned header and seven fields per row") {
  const std::string expected_header =
      "seed,epsilon,achieved_distance,verdict,negativity,min_pt_eig,input_ball_check";
  CHECK(std::string(kSweepCsvHeader) == expected_header);
  SweepRow row;
  row.seed = 7;
  row.epsilon = 0.5;
  row.achieved_distance = 0.25;
  row.verdict = Verdict::EntangledCertified;
  row.negativity = 0.125;
  row.min_pt_eigenvalue = -0.0625;
  row.input_ball_check = true;
  const std::string plain = render_csv({row}, false);
  CHECK(plain == expected_header +
                     std::string("\n7,0.5,0.25,EntangledCertified,0.125,-0.0625,true\n"));
  const std::string stamped = render_csv({row}, true);
  CHECK(stamped.rfind("# generated ", 0) == 0);
  CHECK(stamped.find(expected_header) != std::string::npos);
}
