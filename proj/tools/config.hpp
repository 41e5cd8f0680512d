#pragma once

#include <filesystem>

#include "pandora/experiment.hpp"

namespace pandora::cli {

/// Loads an experiment spec from a flat JSON object. Accepted keys:
/// n_boxes, dim, horizon, cost, norm_bound, sigma_margin, repetitions,
/// feedback (list of "full"/"bandit"), algorithms (list of
/// "cpb"/"linreg-baseline"), seed. Unknown keys are hard errors; missing
/// keys keep their defaults. The output directory is not part of the file
/// and is set by the caller.
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

}  // namespace pandora::cli
