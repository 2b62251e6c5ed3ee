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

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace xycorr {

template <class PairFn>
Eigen::MatrixXd evaluate_pairs(int n_modes, int threads, PairFn &&pair) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n_modes) * static_cast<std::size_t>(n_modes - 1) / 2);
    for (int n = 1; n <= n_modes; ++n) {
        for (int m = n + 1; m <= n_modes; ++m) {
            pairs.emplace_back(n, m);
        }
    }
    std::vector<double> results(pairs.size(), 0.0);

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < pairs.size(); i += stride) {
            results[i] = pair(pairs[i].first, pairs[i].second);
        }
    };

    const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, 256));
    if (workers == 1 || pairs.size() < 2) {
        work(0, 1);
    } else {
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    work(t, workers);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_modes, n_modes);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [n, m] = pairs[i];
        out(n - 1, m - 1) = out(m - 1, n - 1) = results[i];
    }
    return out;
}

} // namespace xycorr
