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

#include "xycorr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "xycorr/errors.hpp"

namespace xycorr {

ModeSet predict_zero_nodes(int n_sites, int j) {
    if (n_sites < 2 || j < 1 || j > n_sites) {
        throw InputError("predict_zero_nodes needs N >= 2 and 1 <= j <= N");
    }
    ModeSet out;
    for (int n = 1; n <= n_sites; ++n) {
        if ((static_cast<long long>(n) * j) % (n_sites + 1) == 0) {
            out.push_back(n);
        }
    }
    return out;
}

std::vector<WeightClass> equal_weight_classes(const StationaryProfile &profile, double class_tol) {
    std::vector<int> order(static_cast<std::size_t>(profile.size()));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return profile.weight(a) > profile.weight(b); });

    std::vector<WeightClass> classes;
    WeightClass zero;
    for (int n : order) {
        const double w = profile.weight(n);
        if (w < class_tol) {
            zero.members.push_back(n);
            continue;
        }
        if (classes.empty() || classes.back().weight - w > class_tol) {
            classes.push_back({w, {}});
        }
        classes.back().members.push_back(n);
    }
    if (!zero.members.empty()) {
        classes.push_back(std::move(zero));
    }
    for (auto &c : classes) {
        std::sort(c.members.begin(), c.members.end());
    }
    return classes;
}

std::vector<ModeSet> extract_clusters(const CorrelationMatrix &matrix, double threshold) {
    if (!(threshold > 0.0)) {
        throw InputError("cluster threshold must be positive");
    }
    const int n = matrix.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        auto &p = parent[static_cast<std::size_t>(x)];
        if (p != x) {
            p = find(p);
        }
        return p;
    };
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (matrix.values(a, b) > threshold) {
                const int ra = find(a);
                const int rb = find(b);
                parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
            }
        }
    }
    std::vector<ModeSet> by_root(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        by_root[static_cast<std::size_t>(find(a))].push_back(a + 1);
    }
    std::vector<ModeSet> out;
    for (auto &set : by_root) {
        if (set.size() >= 2) {
            out.push_back(std::move(set));
        }
    }
    return out;
}

double spread(const CorrelationMatrix &matrix) {
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    const int n = matrix.size();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const double v = matrix.values(a, b);
            if (v > zero_tol) {
                hi = std::max(hi, v);
                lo = std::min(lo, v);
            }
        }
    }
    return hi > 0.0 ? (hi - lo) / hi : 0.0;
}

ClusterReport cluster_report(const StationaryProfile &profile, const CorrelationMatrix &matrix,
                             double threshold, double class_tol) {
    ClusterReport report;
    for (auto &c : equal_weight_classes(profile, class_tol)) {
        if (c.weight == 0.0) {
            report.zero_nodes = std::move(c.members);
        } else {
            report.classes.push_back(std::move(c));
        }
    }
    report.clusters = extract_clusters(matrix, threshold);
    report.spread = spread(matrix);
    return report;
}

std::vector<double> distinct_values(const CorrelationMatrix &matrix, int decimals) {
    const double scale = std::pow(10.0, decimals);
    std::vector<double> values;
    const int n = matrix.size();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            // + 0.0 folds -0 into 0
            values.push_back(std::round(matrix.values(a, b) * scale) / scale + 0.0);
        }
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

} // namespace xycorr
