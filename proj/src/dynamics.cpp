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

#include "xycorr/dynamics.hpp"

#include <cmath>
#include <string>

#include "xycorr/errors.hpp"

namespace xycorr {

EigenbasisState initial_excited_state(const SpectralDecomposition &dec, int j) {
    if (j < 1 || j > dec.size()) {
        throw InputError("excited site j = " + std::to_string(j) + " is outside 1.." +
                         std::to_string(dec.size()));
    }
    const Eigen::VectorXd column = dec.modes.col(j - 1);
    return {(column * column.transpose()).cast<std::complex<double>>(), dec.eigenvalues, 0.0};
}

EigenbasisState evolve(const EigenbasisState &state, double tau) {
    EigenbasisState out = state;
    out.time = state.time + tau;
    if (tau == 0.0) {
        return out;
    }
    const Eigen::Index n = state.rho.rows();
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            if (a == b) {
                continue;
            }
            const double angle = -(state.eigenvalues(a) - state.eigenvalues(b)) * tau;
            out.rho(a, b) = state.rho(a, b) * std::polar(1.0, angle);
        }
    }
    return out;
}

namespace {

struct PairMeasures {
    Eigen::MatrixXd discord;
    Eigen::MatrixXd concurrence;
};

template <class StateAt>
PairMeasures measure_all(int n_modes, const StationarityOptions &options, StateAt &&state_at) {
    PairMeasures out;
    out.discord = evaluate_pairs(n_modes, options.threads, [&](int n, int m) {
        return discord_measurement_oracle(state_at(n, m), options.oracle_grid);
    });
    out.concurrence = evaluate_pairs(n_modes, options.threads,
                                     [&](int n, int m) { return concurrence_wootters(state_at(n, m)); });
    return out;
}

} // namespace

StationarityReport stationarity_report(const SpectralDecomposition &dec, StateKind kind, int j,
                                       std::optional<double> beta, const std::vector<double> &taus,
                                       const StationarityOptions &options) {
    if (taus.empty()) {
        throw InputError("stationarity_report needs at least one tau");
    }
    const StationaryProfile profile = stationary_profile(dec, kind, j, beta);
    const int n_modes = dec.size();

    auto measures_at = [&](double tau) {
        if (kind == StateKind::excited) {
            const EigenbasisState state = evolve(initial_excited_state(dec, j), tau);
            return measure_all(n_modes, options, [&](int n, int m) {
                const double w_n = state.rho(n - 1, n - 1).real();
                const double w_m = state.rho(m - 1, m - 1).real();
                return XState::from_entries(1.0 - w_n - w_m, w_n, w_m, 0.0, state.rho(n - 1, m - 1));
            });
        }
        return measure_all(n_modes, options, [&](int n, int m) {
            const double phase = -(dec.eigenvalues(n - 1) - dec.eigenvalues(m - 1)) * tau;
            return reduced_xstate(profile, n, m, phase);
        });
    };

    const PairMeasures reference = measures_at(0.0);
    StationarityReport report;
    report.taus = taus;
    for (double tau : taus) {
        const PairMeasures now = tau == 0.0 ? reference : measures_at(tau);
        const double dq = (now.discord - reference.discord).cwiseAbs().maxCoeff();
        const double dc = (now.concurrence - reference.concurrence).cwiseAbs().maxCoeff();
        report.discord_deviation.push_back(dq);
        report.concurrence_deviation.push_back(dc);
        report.max_discord_deviation = std::max(report.max_discord_deviation, dq);
        report.max_concurrence_deviation = std::max(report.max_concurrence_deviation, dc);
    }
    return report;
}

} // namespace xycorr
