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

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "xycorr/spectral.hpp"

namespace xycorr {

enum class StateKind { excited, polarized };
enum class Measure { discord, concurrence };
enum class Method { closed, oracle };

[[nodiscard]] const char *to_string(StateKind kind);
[[nodiscard]] const char *to_string(Measure measure);
[[nodiscard]] const char *to_string(Method method);

/// Per-mode stationary weights: rho_nn = U_nj^2 for a single excited site j,
/// J_nn = tanh(beta/2)/2 * U_nj^2 for a single polarized site j.
struct StationaryProfile {
    StateKind kind = StateKind::excited;
    int source_node = 1;
    std::optional<double> beta;
    /// Signed U_nj, indexed by mode (0-based storage).
    std::vector<double> amplitudes;
    std::vector<double> weights;

    [[nodiscard]] int size() const { return static_cast<int>(weights.size()); }
    /// w_n with a 1-based mode label.
    [[nodiscard]] double weight(int n) const { return weights[static_cast<std::size_t>(n - 1)]; }
    /// tanh(beta/2), or 1 for the excited state.
    [[nodiscard]] double polarization() const;
};

[[nodiscard]] StationaryProfile stationary_profile(const SpectralDecomposition &dec,
                                                   StateKind kind, int source_node,
                                                   std::optional<double> beta = std::nullopt);

/// Two-mode reduced density matrix in the basis {|00>, |01>, |10>, |11>},
/// X-shaped: diag(a, b, c, f) plus the single coherence z at (|01>, |10>).
class XState {
  public:
    /// Validates Hermiticity, unit trace and positivity (eigenvalues below
    /// -1e-12 raise NumericalError).
    static XState from_entries(double a, double b, double c, double f, std::complex<double> z);

    [[nodiscard]] const Eigen::Matrix4cd &matrix() const { return rho_; }
    [[nodiscard]] double a() const { return rho_(0, 0).real(); }
    [[nodiscard]] double b() const { return rho_(1, 1).real(); }
    [[nodiscard]] double c() const { return rho_(2, 2).real(); }
    [[nodiscard]] double f() const { return rho_(3, 3).real(); }
    [[nodiscard]] std::complex<double> z() const { return rho_(1, 2); }

  private:
    explicit XState(const Eigen::Matrix4cd &rho) : rho_(rho) {}
    Eigen::Matrix4cd rho_;
};

/// Reduced state of modes n and m (1-based, n != m). `phase` multiplies the
/// coherence by e^{i phase}; no measure depends on it.
[[nodiscard]] XState reduced_xstate(const StationaryProfile &profile, int n, int m,
                                    double phase = 0.0);

// --- concurrence -----------------------------------------------------------

/// 2 sqrt(w_n w_m): the only surviving Wootters eigenvalue for an excited pair.
[[nodiscard]] double concurrence_excited(double w_n, double w_m);

/// General Wootters concurrence max(0, 2 l_max - sum l_i), with l_i the square
/// roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).
[[nodiscard]] double concurrence_wootters(const XState &rho);

// --- discord ---------------------------------------------------------------
//
// One-sided discords refer to a projective measurement on the second tensor
// factor of reduced_xstate(profile, n, m); the symmetrized value is the
// minimum over both sides.

[[nodiscard]] double discord_excited_measured_second(double w_n, double w_m);
[[nodiscard]] double discord_excited_closed(double w_n, double w_m);

[[nodiscard]] double discord_polarized_measured_second(double j_nn, double j_mm);
[[nodiscard]] double discord_polarized_closed(double j_nn, double j_mm);

struct OracleSides {
    double measured_first;
    double measured_second;

    [[nodiscard]] double symmetric() const;
};

inline constexpr int default_oracle_grid = 181;

/// Brute-force discord: mutual information minus the best classical
/// correlation over projective measurements along Bloch directions
/// (theta, phi), searched on a grid_size x grid_size grid followed by one
/// finer grid around the best point.
[[nodiscard]] OracleSides discord_measurement_oracle_sides(const XState &rho, int grid_size);
[[nodiscard]] double discord_measurement_oracle(const XState &rho,
                                                int grid_size = default_oracle_grid);

/// Scan of the one-parameter conditional entropy f(eta) = p0 S0 + p1 S1 for an
/// excited pair with rho_nn = w_n, rho_mm = w_m.
struct EtaReport {
    int argmin_index = 0;
    double argmin_eta = 0.0;
    std::vector<double> f_values;
    double f_at_zero = 0.0;
    double f_at_one = 0.0;
    /// Largest violation of the closed-form endpoint values of p_i and theta_i.
    double endpoint_identity_error = 0.0;
};

[[nodiscard]] EtaReport verify_eta_minimum(double w_n, double w_m, int grid_size);

// --- matrices --------------------------------------------------------------

/// Symmetric N x N matrix of pairwise values; the diagonal is zero.
struct CorrelationMatrix {
    Measure measure = Measure::discord;
    Eigen::MatrixXd values;

    [[nodiscard]] int size() const { return static_cast<int>(values.rows()); }
    [[nodiscard]] double at(int n, int m) const { return values(n - 1, m - 1); }
};

struct MatrixOptions {
    int oracle_grid = default_oracle_grid;
    int threads = 1;
};

/// Pairwise measure over all n < m. For the polarized state the concurrence
/// is always the Wootters value (there is no separate closed form).
[[nodiscard]] CorrelationMatrix correlation_matrix(const StationaryProfile &profile,
                                                   Measure measure, Method method,
                                                   const MatrixOptions &options = {});

/// Evaluates `pair(n, m)` (1-based, n < m) for every pair, possibly on several
/// threads; the result does not depend on the thread count.
template <class PairFn>
Eigen::MatrixXd evaluate_pairs(int n_modes, int threads, PairFn &&pair);

} // namespace xycorr

#include "xycorr/detail/pairs.hpp"
