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
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace xycorr {

// Coupling profiles. Bond i connects sites i and i+1 (1-based).

struct Homogeneous {};

/// Odd bonds carry 1, even bonds carry `delta` (the dimerization degree).
struct Alternating {
    double delta;
};

/// Bonds repeat the pattern d1, d2, d3 starting from bond 1.
struct ThreeAlternating {
    double d1;
    double d2;
    double d3;
};

/// Perfect-state-transfer profile d_i = sqrt(i (N - i) / (N - 1)).
struct Cdel {};

/// N-1 bond couplings given verbatim.
struct Explicit {
    std::vector<double> couplings;
};

using CouplingProfile =
    std::variant<Homogeneous, Alternating, ThreeAlternating, Cdel, Explicit>;

enum class InteractionRange { nearest_neighbor, all_pairs_ddi };

struct ChainSpec {
    int n_sites = 0;
    CouplingProfile profile = Homogeneous{};
    InteractionRange range = InteractionRange::nearest_neighbor;
    /// Dimensionless site coordinates; defaults to xi_i = i - 1.
    std::optional<std::vector<double>> positions;

    /// Throws InputError when an invariant is violated.
    void validate() const;
};

/// Symmetric, non-negative, zero-diagonal couplings in units of D_{1,2}.
struct CouplingMatrix {
    Eigen::MatrixXd d;

    [[nodiscard]] int size() const { return static_cast<int>(d.rows()); }
};

/// Single-excitation block of the dimensionless XY Hamiltonian in the
/// site basis |n>, n = 1..N.
struct HamiltonianMatrix {
    Eigen::MatrixXd h;

    [[nodiscard]] int size() const { return static_cast<int>(h.rows()); }
};

[[nodiscard]] std::string profile_name(const CouplingProfile &profile);
[[nodiscard]] std::string range_name(InteractionRange range);

[[nodiscard]] CouplingMatrix build_couplings(const ChainSpec &spec);

/// h_nm = d_nm / 2 (flip-flop amplitude of I_x I_x + I_y I_y), h_nn = 0.
[[nodiscard]] HamiltonianMatrix build_hamiltonian(const CouplingMatrix &d);

} // namespace xycorr
