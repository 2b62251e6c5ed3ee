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

#include <Eigen/Dense>

#include "xycorr/chain_model.hpp"

namespace xycorr {

/// Eigenvalues and eigenmodes of the single-excitation Hamiltonian.
///
/// Storage is 0-based: `modes(k, j)` is the component of eigenmode k+1 on
/// site j+1. Use `amplitude()` for the 1-based labels used everywhere else.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd modes;

    [[nodiscard]] int size() const { return static_cast<int>(eigenvalues.size()); }

    /// U_{kj} with 1-based mode k and site j.
    [[nodiscard]] double amplitude(int k, int j) const { return modes(k - 1, j - 1); }
};

struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm falls below
    /// tolerance * max(1, ||h||_F).
    double tolerance = 1e-13;
    int max_sweeps = 100;
};

/// Eigenvalues closer than this are ordered by the index of their first
/// significant component instead of by value.
inline constexpr double degeneracy_tol = 1e-9;

/// Cyclic Jacobi diagonalization of the (real symmetric) Hamiltonian.
///
/// Modes come out sorted by descending eigenvalue; ties within
/// `degeneracy_tol` are broken by the first site whose component exceeds
/// 1e-12 in magnitude, and that component is made positive. Throws
/// NumericalError when the sweep cap is hit, InputError for a non-symmetric
/// input.
[[nodiscard]] SpectralDecomposition diagonalize(const HamiltonianMatrix &h,
                                                const JacobiOptions &options = {});

/// Closed form for the homogeneous nearest-neighbour chain:
/// eps_k = cos(pi k / (N+1)), U_kj = sqrt(2/(N+1)) sin(pi k j / (N+1)).
[[nodiscard]] SpectralDecomposition analytic_homogeneous(int n_sites);

/// Non-interacting dimer limit (delta -> 0) of the alternating chain with odd
/// N: eps_k = d1/2 for k < (N+1)/2, 0 at k = (N+1)/2, -d1/2 above. The middle
/// mode is localized on site N. Every mode is normalized to unit length.
[[nodiscard]] SpectralDecomposition analytic_alternating_limit(int n_sites, double d1);

} // namespace xycorr
