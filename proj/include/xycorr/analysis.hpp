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

#include <vector>

#include "xycorr/xstate.hpp"

namespace xycorr {

inline constexpr double default_class_tol = 1e-9;
inline constexpr double zero_tol = 1e-9;

/// Modes sharing one stationary weight (1-based labels, ascending).
struct WeightClass {
    double weight = 0.0;
    std::vector<int> members;
};

using ModeSet = std::vector<int>;

struct ClusterReport {
    ModeSet zero_nodes;
    /// Non-zero weight classes, by descending weight.
    std::vector<WeightClass> classes;
    std::vector<ModeSet> clusters;
    double spread = 0.0;
};

/// Modes n in 1..N of the homogeneous chain with n j = 0 (mod N + 1).
[[nodiscard]] ModeSet predict_zero_nodes(int n_sites, int j);

/// Groups all modes by weight, descending; weights below class_tol fall into
/// a single class of weight 0 (always last when present).
[[nodiscard]] std::vector<WeightClass> equal_weight_classes(const StationaryProfile &profile,
                                                            double class_tol = default_class_tol);

/// Connected components (size >= 2) of the graph with an edge wherever
/// M_nm > threshold, ordered by smallest member.
[[nodiscard]] std::vector<ModeSet> extract_clusters(const CorrelationMatrix &matrix,
                                                    double threshold);

/// (max - min) / max over the off-diagonal entries above zero_tol; 0 when
/// there are none.
[[nodiscard]] double spread(const CorrelationMatrix &matrix);

[[nodiscard]] ClusterReport cluster_report(const StationaryProfile &profile,
                                           const CorrelationMatrix &matrix, double threshold,
                                           double class_tol = default_class_tol);

/// Distinct off-diagonal values after rounding to `decimals` places,
/// descending.
[[nodiscard]] std::vector<double> distinct_values(const CorrelationMatrix &matrix,
                                                  int decimals = 6);

} // namespace xycorr
