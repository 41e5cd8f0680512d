#include "config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace pandora::cli {

namespace {

using nlohmann::json;

const std::set<std::string>& accepted_keys() {
  static const std::set<std::string> keys{
      "n_boxes",      "dim",         "horizon",   "cost",
      "norm_bound",   "sigma_margin", "repetitions", "feedback",
      "algorithms",   "seed"};
  return keys;
}

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("config error: " + message);
}

int require_positive_int(const json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    fail("key '" + key + "' must be a positive integer");
  }
  return v.get<int>();
}

double require_positive_number(const json& v, const std::string& key) {
  if (!v.is_number() || !(v.get<double>() > 0.0)) {
    fail("key '" + key + "' must be a positive number");
  }
  return v.get<double>();
}

}  // namespace

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file '" + path.string() + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!accepted_keys().contains(key)) {
      std::string keys;
      for (const std::string& k : accepted_keys()) {
        keys += keys.empty() ? k : ", " + k;
      }
      fail("unknown key '" + key + "'; accepted keys: " + keys);
    }
  }

  ExperimentSpec spec;
  if (doc.contains("n_boxes")) {
    spec.env.n_boxes = require_positive_int(doc["n_boxes"], "n_boxes");
  }
  if (doc.contains("dim")) spec.env.dim = require_positive_int(doc["dim"], "dim");
  if (doc.contains("horizon")) {
    spec.env.horizon = require_positive_int(doc["horizon"], "horizon");
  }
  if (doc.contains("cost")) {
    spec.env.cost = require_positive_number(doc["cost"], "cost");
  }
  if (doc.contains("norm_bound")) {
    spec.env.norm_bound = require_positive_number(doc["norm_bound"], "norm_bound");
  }
  if (doc.contains("sigma_margin")) {
    spec.env.sigma_margin =
        require_positive_number(doc["sigma_margin"], "sigma_margin");
  }
  if (doc.contains("repetitions")) {
    spec.repetitions = require_positive_int(doc["repetitions"], "repetitions");
  }
  if (doc.contains("seed")) {
    const json& v = doc["seed"];
    if (!v.is_number_unsigned() && !v.is_number_integer()) {
      fail("key 'seed' must be a nonnegative integer");
    }
    if (v.is_number_integer() && v.get<long long>() < 0) {
      fail("key 'seed' must be a nonnegative integer");
    }
    spec.env.seed = v.get<std::uint64_t>();
  }
  if (doc.contains("feedback")) {
    const json& v = doc["feedback"];
    if (!v.is_array() || v.empty()) {
      fail("key 'feedback' must be a non-empty list of modes (full, bandit)");
    }
    spec.modes.clear();
    for (const json& item : v) {
      if (!item.is_string()) fail("feedback entries must be strings");
      spec.modes.push_back(parse_feedback_mode(item.get<std::string>()));
    }
  }
  if (doc.contains("algorithms")) {
    const json& v = doc["algorithms"];
    if (!v.is_array() || v.empty()) {
      fail("key 'algorithms' must be a non-empty list (cpb, linreg-baseline)");
    }
    spec.algorithms.clear();
    for (const json& item : v) {
      if (!item.is_string()) fail("algorithm entries must be strings");
      spec.algorithms.push_back(parse_algorithm(item.get<std::string>()));
    }
  }
  return spec;
}

}  // namespace pandora::cli
