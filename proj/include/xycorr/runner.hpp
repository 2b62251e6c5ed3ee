// Copyright 2026 The xycorr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "xycorr/analysis.hpp"
#include "xycorr/chain_model.hpp"
#include "xycorr/dynamics.hpp"
#include "xycorr/spectral.hpp"
#include "xycorr/xstate.hpp"

namespace xycorr {

inline constexpr const char *version_string = "0.1.0";

/// Exit statuses of `run`.
enum ExitStatus : int { exit_ok = 0, exit_config_error = 2, exit_numerical_error = 3 };

enum class MethodChoice { closed, oracle, both };

struct InitialState {
    StateKind kind = StateKind::excited;
    int j = 1;
    std::optional<double> beta;
};

struct OutputOptions {
    std::optional<std::filesystem::path> matrix_csv;
    std::optional<std::filesystem::path> summary_json;
    bool clusters = false;
    double threshold = 1e-9;
};

struct RunConfig {
    ChainSpec chain;
    InitialState initial_state;
    std::vector<Measure> measures;
    MethodChoice method = MethodChoice::closed;
    int oracle_grid = default_oracle_grid;
    std::vector<double> stationarity_taus;
    OutputOptions outputs;
};

/// Parses and validates a run document. Unknown keys, missing fields and
/// out-of-range values raise InputError naming the offending field.
[[nodiscard]] RunConfig parse_config(const nlohmann::json &doc);
[[nodiscard]] RunConfig load_config(const std::filesystem::path &path);
[[nodiscard]] nlohmann::json config_to_json(const RunConfig &config);

struct MeasureResult {
    CorrelationMatrix matrix;
    std::optional<double> closed_oracle_discrepancy;
    std::vector<ModeSet> clusters;
};

struct RunResult {
    SpectralDecomposition spectrum;
    StationaryProfile profile;
    std::vector<MeasureResult> measures;
    std::vector<WeightClass> classes;
    ModeSet zero_nodes;
    std::optional<StationarityReport> stationarity;
    nlohmann::json summary;
};

/// Runs the pipeline without touching the filesystem.
[[nodiscard]] RunResult execute(const RunConfig &config, int threads = 1);

/// Path of the CSV for `measure`: the configured path when a single measure
/// is requested, otherwise `<stem>_<measure><ext>`.
[[nodiscard]] std::filesystem::path matrix_path(const RunConfig &config, Measure measure);

/// Writes the CSV matrices (with `.json` label sidecars) and the summary.
void write_artifacts(const RunConfig &config, const RunResult &result);

/// "%.12g" rows, comma separated, no header.
void write_matrix_csv(std::ostream &os, const CorrelationMatrix &matrix);

/// Loads, executes and writes; maps failures to ExitStatus with a message on
/// `err` that names the offending field or pair.
[[nodiscard]] int run(const std::filesystem::path &config_path, int threads, std::ostream &out,
                      std::ostream &err);

struct Recipe {
    std::string name;
    std::string description;
    nlohmann::json config;
};

/// Ready-made configurations for the standard N = 41 scenarios.
[[nodiscard]] const std::vector<Recipe> &list_recipes();
[[nodiscard]] std::string format_recipes();

} // namespace xycorr
