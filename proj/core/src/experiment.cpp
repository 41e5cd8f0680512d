#include "pandora/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pandora {

std::string_view to_string(FeedbackMode mode) {
  return mode == FeedbackMode::full ? "full" : "bandit";
}

std::string_view to_string(Algorithm alg) {
  return alg == Algorithm::cpb ? "cpb" : "linreg-baseline";
}

FeedbackMode parse_feedback_mode(std::string_view name) {
  if (name == "full") return FeedbackMode::full;
  if (name == "bandit") return FeedbackMode::bandit;
  throw std::invalid_argument("unknown feedback mode '" + std::string(name) +
                              "'; accepted values: full, bandit");
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "cpb") return Algorithm::cpb;
  if (name == "linreg-baseline") return Algorithm::linreg_baseline;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "'; accepted values: cpb, linreg-baseline");
}

void ExperimentSpec::validate() const {
  env.validate();
  if (repetitions < 1) {
    throw std::invalid_argument("ExperimentSpec: repetitions must be >= 1");
  }
  if (modes.empty()) {
    throw std::invalid_argument("ExperimentSpec: need at least one feedback mode");
  }
  if (algorithms.empty()) {
    throw std::invalid_argument("ExperimentSpec: need at least one algorithm");
  }
  if (out_dir.empty()) {
    throw std::invalid_argument("ExperimentSpec: output directory not set");
  }
}

const ExperimentResult::Cell& ExperimentResult::cell(FeedbackMode mode,
                                                     Algorithm alg) const {
  for (const Cell& c : cells) {
    if (c.mode == mode && c.algorithm == alg) return c;
  }
  throw std::out_of_range("ExperimentResult: no such (mode, algorithm) cell");
}

double ExperimentResult::mean_cum_regret(FeedbackMode mode, Algorithm alg,
                                         int t) const {
  const Cell& c = cell(mode, alg);
  const std::size_t idx = static_cast<std::size_t>(t - 1);
  double sum = 0.0;
  for (const RegretTrace& trace : c.reps) sum += trace.cum_regret.at(idx);
  return sum / static_cast<double>(c.reps.size());
}

double ExperimentResult::stderr_cum_regret(FeedbackMode mode, Algorithm alg,
                                           int t) const {
  const Cell& c = cell(mode, alg);
  const std::size_t reps = c.reps.size();
  if (reps < 2) return 0.0;
  const double mean = mean_cum_regret(mode, alg, t);
  const std::size_t idx = static_cast<std::size_t>(t - 1);
  double ss = 0.0;
  for (const RegretTrace& trace : c.reps) {
    const double d = trace.cum_regret.at(idx) - mean;
    ss += d * d;
  }
  const double sample_sd = std::sqrt(ss / static_cast<double>(reps - 1));
  return sample_sd / std::sqrt(static_cast<double>(reps));
}

std::vector<AggregateRow> ExperimentResult::aggregate_rows() const {
  std::vector<AggregateRow> rows;
  for (const Cell& c : cells) {
    if (c.reps.empty()) continue;
    const int horizon = c.reps.front().rounds();
    for (int t = 1; t <= horizon; ++t) {
      rows.push_back(AggregateRow{c.mode, c.algorithm, t,
                                  mean_cum_regret(c.mode, c.algorithm, t),
                                  stderr_cum_regret(c.mode, c.algorithm, t)});
    }
  }
  return rows;
}

std::uint64_t substream_seed(std::uint64_t master, FeedbackMode mode,
                             int repetition) {
  const std::uint64_t mode_id = mode == FeedbackMode::full ? 1 : 2;
  return mix_seed(mix_seed(master, mode_id),
                  static_cast<std::uint64_t>(repetition));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trace_filename(FeedbackMode mode, Algorithm alg, int repetition) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", repetition);
  return "trace_" + std::string(to_string(mode)) + "_" +
         std::string(to_string(alg)) + "_rep" + buf + ".csv";
}

std::string trace_csv(FeedbackMode mode, Algorithm alg, int repetition,
                      const RegretTrace& trace) {
  std::string out(kTraceCsvHeader);
  out += '\n';
  const std::string prefix = std::string(to_string(mode)) + "," +
                             std::string(to_string(alg)) + "," +
                             std::to_string(repetition) + ",";
  for (int t = 0; t < trace.rounds(); ++t) {
    const std::size_t i = static_cast<std::size_t>(t);
    out += prefix;
    out += std::to_string(t + 1);
    out += ',';
    out += format_double(trace.round_cost[i]);
    out += ',';
    out += format_double(trace.opt_cost[i]);
    out += ',';
    out += format_double(trace.cum_regret[i]);
    out += '\n';
  }
  return out;
}

std::string aggregate_csv(const std::vector<AggregateRow>& rows) {
  std::string out(kAggregateCsvHeader);
  out += '\n';
  for (const AggregateRow& row : rows) {
    out += std::string(to_string(row.mode)) + "," +
           std::string(to_string(row.algorithm)) + "," + std::to_string(row.t) +
           "," + format_double(row.mean_cum_regret) + "," +
           format_double(row.stderr_cum_regret) + '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

double parse_number(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) {
    throw std::invalid_argument("malformed numeric CSV field '" + s + "'");
  }
  return v;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text,
                                                std::string_view header,
                                                std::size_t fields) {
  std::istringstream ss(text);
  std::string line;
  if (!std::getline(ss, line) || line != header) {
    throw std::invalid_argument("unexpected CSV header: '" + line + "'");
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    auto row = split_csv_line(line);
    if (row.size() != fields) {
      throw std::invalid_argument("malformed CSV row: '" + line + "'");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing '" + path.string() + "'");
  }
}

}  // namespace

std::vector<TraceCsvRow> parse_trace_csv(const std::string& text) {
  std::vector<TraceCsvRow> rows;
  for (const auto& f : parse_csv(text, kTraceCsvHeader, 7)) {
    TraceCsvRow row;
    row.mode = f[0];
    row.algorithm = f[1];
    row.repetition = static_cast<int>(parse_number(f[2]));
    row.t = static_cast<int>(parse_number(f[3]));
    row.round_cost = parse_number(f[4]);
    row.opt_cost = parse_number(f[5]);
    row.cum_regret = parse_number(f[6]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<AggregateRow> parse_aggregate_csv(const std::string& text) {
  std::vector<AggregateRow> rows;
  for (const auto& f : parse_csv(text, kAggregateCsvHeader, 5)) {
    AggregateRow row;
    row.mode = parse_feedback_mode(f[0]);
    row.algorithm = parse_algorithm(f[1]);
    row.t = static_cast<int>(parse_number(f[2]));
    row.mean_cum_regret = parse_number(f[3]);
    row.stderr_cum_regret = parse_number(f[4]);
    rows.push_back(row);
  }
  return rows;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  std::filesystem::create_directories(spec.out_dir);

  ExperimentResult result;
  for (FeedbackMode mode : spec.modes) {
    for (Algorithm alg : spec.algorithms) {
      result.cells.push_back({mode, alg, {}});
    }
  }

  for (FeedbackMode mode : spec.modes) {
    for (int rep = 0; rep < spec.repetitions; ++rep) {
      EnvConfig env = spec.env;
      env.seed = substream_seed(spec.env.seed, mode, rep);

      const GroundTruth truth = make_ground_truth(env);
      const std::vector<RoundInstance> stream = generate_stream(truth, env);

      CpbConfig cfg;
      cfg.n_boxes = env.n_boxes;
      cfg.dim = env.dim;
      cfg.horizon = env.horizon;
      cfg.costs.assign(static_cast<std::size_t>(env.n_boxes), env.cost);
      cfg.norm_bound = env.norm_bound;
      cfg.feedback = mode;
      cfg.seed = env.seed;

      for (Algorithm alg : spec.algorithms) {
        RegretTrace trace = alg == Algorithm::cpb ? cpb_run(stream, cfg)
                                                  : baseline_run(stream, cfg);
        write_file(spec.out_dir / trace_filename(mode, alg, rep),
                   trace_csv(mode, alg, rep, trace));
        for (auto& c : result.cells) {
          if (c.mode == mode && c.algorithm == alg) {
            c.reps.push_back(std::move(trace));
            break;
          }
        }
      }
    }
  }

  write_file(spec.out_dir / "aggregate.csv",
             aggregate_csv(result.aggregate_rows()));
  return result;
}

}  // namespace pandora
