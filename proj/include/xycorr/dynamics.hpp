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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "xycorr/spectral.hpp"
#include "xycorr/xstate.hpp"

namespace xycorr {

/// Single-excitation density matrix written in the Hamiltonian eigenbasis.
struct EigenbasisState {
    Eigen::MatrixXcd rho;
    Eigen::VectorXd eigenvalues;
    double time = 0.0;
};

/// (rho^H_0)_{nm} = U_{nj} U_{mj} for the excited site j (1-based).
[[nodiscard]] EigenbasisState initial_excited_state(const SpectralDecomposition &dec, int j);

/// Advances the state by tau: rho_nm -> rho_nm exp(-i (eps_n - eps_m) tau).
[[nodiscard]] EigenbasisState evolve(const EigenbasisState &state, double tau);

struct StationarityOptions {
    /// Grid for the measurement-search discord used to re-evaluate each
    /// time-dependent X-state.
    int oracle_grid = 64;
    int threads = 1;
};

struct StationarityReport {
    std::vector<double> taus;
    /// Per tau: max over pairs of |Q(tau) - Q(0)| and |C(tau) - C(0)|.
    std::vector<double> discord_deviation;
    std::vector<double> concurrence_deviation;
    double max_discord_deviation = 0.0;
    double max_concurrence_deviation = 0.0;

    [[nodiscard]] double max_deviation() const {
        return std::max(max_discord_deviation, max_concurrence_deviation);
    }
};

/// Rebuilds every pairwise X-state at each tau, with the coherence carrying
/// its time-dependent phase, and compares discord (measurement search) and
/// Wootters concurrence against tau = 0. For the excited state the X-states
/// are taken from the evolved eigenbasis density matrix itself.
[[nodiscard]] StationarityReport stationarity_report(const SpectralDecomposition &dec,
                                                     StateKind kind, int j,
                                                     std::optional<double> beta,
                                                     const std::vector<double> &taus,
                                                     const StationarityOptions &options = {});

} // namespace xycorr
