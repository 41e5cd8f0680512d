#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pandora/cpb.hpp"
#include "pandora/env.hpp"

namespace pandora {

enum class Algorithm { cpb, linreg_baseline };

std::string_view to_string(FeedbackMode mode);
std::string_view to_string(Algorithm alg);
FeedbackMode parse_feedback_mode(std::string_view name);
Algorithm parse_algorithm(std::string_view name);

/// Full description of one experiment: environment, feedback modes,
/// algorithms, repetition count, and output directory. env.seed is the
/// master seed; per-repetition substreams are derived from it.
struct ExperimentSpec {
  EnvConfig env;
  std::vector<FeedbackMode> modes{FeedbackMode::full, FeedbackMode::bandit};
  std::vector<Algorithm> algorithms{Algorithm::cpb, Algorithm::linreg_baseline};
  int repetitions = 20;
  std::filesystem::path out_dir;

  void validate() const;
};

struct AggregateRow {
  FeedbackMode mode;
  Algorithm algorithm;
  int t = 0;  // 1-based round
  double mean_cum_regret = 0.0;
  double stderr_cum_regret = 0.0;  // sample stddev / sqrt(repetitions)
};

struct ExperimentResult {
  struct Cell {
    FeedbackMode mode;
    Algorithm algorithm;
    std::vector<RegretTrace> reps;
  };
  std::vector<Cell> cells;

  const Cell& cell(FeedbackMode mode, Algorithm alg) const;
  double mean_cum_regret(FeedbackMode mode, Algorithm alg, int t) const;
  double stderr_cum_regret(FeedbackMode mode, Algorithm alg, int t) const;
  std::vector<AggregateRow> aggregate_rows() const;
};

/// Seed for a (mode, repetition) substream. The algorithm is deliberately
/// not part of the mix so paired algorithms replay identical instances.
std::uint64_t substream_seed(std::uint64_t master, FeedbackMode mode,
                             int repetition);

/// Runs every (mode, repetition): generates the instance stream once, runs
/// each algorithm on it, writes one raw trace CSV per (mode, algorithm,
/// repetition) plus aggregate.csv, and returns the traces for inspection.
ExperimentResult run_experiment(const ExperimentSpec& spec);

// --- CSV surface -----------------------------------------------------------
//
// Raw trace:  mode,algorithm,repetition,t,round_cost,opt_cost,cum_regret
// Aggregate:  mode,algorithm,t,mean_cum_regret,stderr
//
// Values are written with %.17g, which round-trips doubles exactly.

inline constexpr std::string_view kTraceCsvHeader =
    "mode,algorithm,repetition,t,round_cost,opt_cost,cum_regret";
inline constexpr std::string_view kAggregateCsvHeader =
    "mode,algorithm,t,mean_cum_regret,stderr";

std::string format_double(double v);

std::string trace_csv(FeedbackMode mode, Algorithm alg, int repetition,
                      const RegretTrace& trace);
std::string aggregate_csv(const std::vector<AggregateRow>& rows);

std::string trace_filename(FeedbackMode mode, Algorithm alg, int repetition);

struct TraceCsvRow {
  std::string mode;
  std::string algorithm;
  int repetition = 0;
  int t = 0;
  double round_cost = 0.0;
  double opt_cost = 0.0;
  double cum_regret = 0.0;
};

std::vector<TraceCsvRow> parse_trace_csv(const std::string& text);
std::vector<AggregateRow> parse_aggregate_csv(const std::string& text);

}  // namespace pandora
