#include "nonsep/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "nonsep/io.hpp"
#include "nonsep/rng.hpp"

namespace nonsep {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string current;
  std::istringstream stream(value);
  while (std::getline(stream, current, ',')) {
    items.push_back(trim(current));
  }
  return items;
}

long parse_long(const std::string& text, const std::string& key) {
  long value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw ParseError("config key '" + key + "': bad integer '" + text + "'");
  }
  return value;
}

std::uint64_t parse_u64(const std::string& text, const std::string& key) {
  std::uint64_t value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw ParseError("config key '" + key + "': bad unsigned integer '" + text + "'");
  }
  return value;
}

double parse_real(const std::string& text, const std::string& key) {
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw ParseError("config key '" + key + "': bad real '" + text + "'");
  }
  return value;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig config;
  std::set<std::string> seen;
  std::istringstream stream(text);
  std::string raw_line;
  int line_number = 0;
  while (std::getline(stream, raw_line)) {
    ++line_number;
    std::string line = raw_line;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto equals = line.find('=');
    if (equals == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_number) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, equals));
    const std::string value = trim(line.substr(equals + 1));
    if (key.empty() || value.empty()) {
      throw ParseError("config line " + std::to_string(line_number) + ": empty key or value");
    }
    if (!seen.insert(key).second) {
      throw ParseError("config line " + std::to_string(line_number) + ": duplicate key '" + key +
                       "'");
    }
    if (key == "dims") {
      for (const auto& item : split_list(value)) {
        config.dims.push_back(static_cast<int>(parse_long(item, key)));
      }
    } else if (key == "epsilons") {
      for (const auto& item : split_list(value)) {
        config.epsilons.push_back(parse_real(item, key));
      }
    } else if (key == "samples") {
      config.samples = static_cast<int>(parse_long(value, key));
    } else if (key == "components") {
      config.components = static_cast<int>(parse_long(value, key));
    } else if (key == "seed") {
      config.seed = parse_u64(value, key);
    } else if (key == "out") {
      config.output_path = value;
    } else {
      throw ParseError("config line " + std::to_string(line_number) + ": unknown key '" + key +
                       "'");
    }
  }
  if (config.dims.size() != 2 || config.dims[0] < 1 || config.dims[1] < 1) {
    throw ParseError("config: 'dims' must list exactly two factors >= 1");
  }
  if (config.epsilons.empty()) {
    throw ParseError("config: 'epsilons' must list at least one value");
  }
  for (double eps : config.epsilons) {
    if (!(eps > 0.0)) throw ParseError("config: epsilons must be strictly positive");
  }
  if (config.samples < 1) {
    throw ParseError("config: 'samples' must be >= 1");
  }
  if (config.components < 1) {
    throw ParseError("config: 'components' must be >= 1");
  }
  return config;
}

ExperimentConfig read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config) {
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(config.samples) * config.epsilons.size());
  for (int sample = 0; sample < config.samples; ++sample) {
    const std::uint64_t stream = derive_stream(config.seed, static_cast<std::uint64_t>(sample));
    const DensityOperator input = sample_separable(config.dims, config.components, stream);
    const bool ball = separable_ball_check(input);
    for (double epsilon : config.epsilons) {
      const EntanglingResult result = entangling_perturbation(input, epsilon, stream);
      SweepRow row;
      row.seed = stream;
      row.epsilon = epsilon;
      row.achieved_distance = result.record.achieved_trace_distance;
      row.verdict = result.record.report.verdict;
      row.negativity = result.record.report.negativity;
      row.min_pt_eigenvalue = result.record.report.min_pt_eigenvalue;
      row.input_ball_check = ball;
      rows.push_back(row);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.epsilon < b.epsilon;
  });
  return rows;
}

std::string render_csv(const std::vector<SweepRow>& rows, bool with_timestamp) {
  std::string out;
  if (with_timestamp) {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);
    out += "# generated ";
    out += stamp;
    out += '\n';
  }
  out += kSweepCsvHeader;
  out += '\n';
  for (const auto& row : rows) {
    out += std::to_string(row.seed);
    out += ',';
    out += format_double(row.epsilon);
    out += ',';
    out += format_double(row.achieved_distance);
    out += ',';
    out += to_string(row.verdict);
    out += ',';
    out += format_double(row.negativity);
    out += ',';
    out += format_double(row.min_pt_eigenvalue);
    out += ',';
    out += row.input_ball_check ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace nonsep
