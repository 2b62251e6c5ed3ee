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

#include "xycorr/xstate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "xycorr/errors.hpp"

namespace xycorr {

namespace {

constexpr double psd_jitter = 1e-12;
constexpr double simplex_slack = 1e-12;

/// x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

/// Entropy (bits) of a two-outcome distribution with probabilities
/// (1 -+ t) / 2.
double bloch_entropy(double t) {
    t = std::clamp(t, 0.0, 1.0);
    return -xlog2x(0.5 * (1.0 - t)) - xlog2x(0.5 * (1.0 + t));
}

double checked_eigenvalue(double lambda) {
    if (lambda < -psd_jitter) {
        std::ostringstream os;
        os << "density matrix is not positive semidefinite (eigenvalue " << lambda << ")";
        throw NumericalError(os.str());
    }
    return std::max(lambda, 0.0);
}

double entropy_of(const Eigen::Matrix4cd &rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        s -= xlog2x(checked_eigenvalue(solver.eigenvalues()(i)));
    }
    return s;
}

/// -sum mu log2 mu over the eigenvalues of an unnormalized 2x2 Hermitian
/// block [[m00, m01], [conj(m01), m11]].
double block_entropy_sum(double m00, double m11, std::complex<double> m01) {
    const double half = 0.5 * (m00 + m11);
    const double dz = 0.5 * (m00 - m11);
    const double radius = std::sqrt(dz * dz + std::norm(m01));
    return -xlog2x(std::max(half + radius, 0.0)) - xlog2x(std::max(half - radius, 0.0));
}

void check_simplex(double w_n, double w_m) {
    if (!(w_n >= 0.0) || !(w_m >= 0.0) || w_n + w_m > 1.0 + simplex_slack) {
        std::ostringstream os;
        os << "weights (" << w_n << ", " << w_m << ") are outside the simplex";
        throw InputError(os.str());
    }
}

void check_polarized_weights(double j_nn, double j_mm) {
    if (!(j_nn >= 0.0) || !(j_mm >= 0.0) || j_nn >= 0.5 || j_mm >= 0.5) {
        std::ostringstream os;
        os << "polarized weights (" << j_nn << ", " << j_mm << ") must lie in [0, 1/2)";
        throw InputError(os.str());
    }
}

void check_mode(const StationaryProfile &profile, int n) {
    if (n < 1 || n > profile.size()) {
        throw InputError("mode " + std::to_string(n) + " is outside 1.." +
                         std::to_string(profile.size()));
    }
}

} // namespace

const char *to_string(StateKind kind) {
    return kind == StateKind::excited ? "excited" : "polarized";
}
const char *to_string(Measure measure) {
    return measure == Measure::discord ? "discord" : "concurrence";
}
const char *to_string(Method method) { return method == Method::closed ? "closed" : "oracle"; }

double StationaryProfile::polarization() const {
    return kind == StateKind::excited ? 1.0 : std::tanh(0.5 * beta.value_or(0.0));
}

StationaryProfile stationary_profile(const SpectralDecomposition &dec, StateKind kind,
                                     int source_node, std::optional<double> beta) {
    const int n = dec.size();
    if (source_node < 1 || source_node > n) {
        throw InputError("source node j = " + std::to_string(source_node) +
                         " is outside 1.." + std::to_string(n));
    }
    if (kind == StateKind::polarized) {
        if (!beta) {
            throw InputError("a polarized initial state needs beta");
        }
        if (!(*beta >= 0.0) || !std::isfinite(*beta)) {
            throw InputError("beta must be a finite non-negative number");
        }
    } else if (beta) {
        throw InputError("beta is only meaningful for a polarized initial state");
    }

    StationaryProfile out;
    out.kind = kind;
    out.source_node = source_node;
    out.beta = beta;
    out.amplitudes.resize(static_cast<std::size_t>(n));
    out.weights.resize(static_cast<std::size_t>(n));
    const double scale = kind == StateKind::excited ? 1.0 : 0.5 * out.polarization();
    for (int k = 1; k <= n; ++k) {
        const double u = dec.amplitude(k, source_node);
        out.amplitudes[static_cast<std::size_t>(k - 1)] = u;
        out.weights[static_cast<std::size_t>(k - 1)] = scale * u * u;
    }
    return out;
}

XState XState::from_entries(double a, double b, double c, double f, std::complex<double> z) {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(0, 0) = a;
    rho(1, 1) = b;
    rho(2, 2) = c;
    rho(3, 3) = f;
    rho(1, 2) = z;
    rho(2, 1) = std::conj(z);

    const double trace = a + b + c + f;
    if (std::abs(trace - 1.0) > psd_jitter) {
        std::ostringstream os;
        os << "X-state trace is " << trace << ", expected 1";
        throw NumericalError(os.str());
    }
    const double half = 0.5 * (b + c);
    const double radius = std::hypot(0.5 * (b - c), std::abs(z));
    checked_eigenvalue(a);
    checked_eigenvalue(f);
    checked_eigenvalue(half - radius);
    return XState(rho);
}

XState reduced_xstate(const StationaryProfile &profile, int n, int m, double phase) {
    check_mode(profile, n);
    check_mode(profile, m);
    if (n == m) {
        throw InputError("reduced_xstate needs two distinct modes, got n = m = " +
                         std::to_string(n));
    }
    const double w_n = profile.weight(n);
    const double w_m = profile.weight(m);
    const std::complex<double> rotation = std::polar(1.0, phase);

    if (profile.kind == StateKind::excited) {
        return XState::from_entries(1.0 - w_n - w_m, w_n, w_m, 0.0,
                                    std::sqrt(w_n * w_m) * rotation);
    }

    const double u_n = profile.amplitudes[static_cast<std::size_t>(n - 1)];
    const double u_m = profile.amplitudes[static_cast<std::size_t>(m - 1)];
    const double j00 = 0.25 - 0.25 * profile.polarization() * (u_n * u_n + u_m * u_m);
    const double sign = u_n * u_m < 0.0 ? -1.0 : 1.0;
    return XState::from_entries(j00 + w_m + w_n, j00 + w_m, j00 + w_n, j00,
                                sign * std::sqrt(w_n * w_m) * rotation);
}

double concurrence_excited(double w_n, double w_m) {
    check_simplex(w_n, w_m);
    return 2.0 * std::sqrt(w_n * w_m);
}

double concurrence_wootters(const XState &state) {
    const Eigen::Matrix4cd &rho = state.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);

    // rho = W W^dagger over the numerically non-null eigenvectors; the Wootters
    // values are then the singular values of W^T (sy x sy) W.
    constexpr double rank_cutoff = 1e-13;
    std::vector<int> kept;
    for (int i = 0; i < 4; ++i) {
        if (checked_eigenvalue(solver.eigenvalues()(i)) > rank_cutoff) {
            kept.push_back(i);
        }
    }
    if (kept.empty()) {
        return 0.0;
    }
    Eigen::MatrixXcd w(4, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t col = 0; col < kept.size(); ++col) {
        const int i = kept[col];
        w.col(static_cast<Eigen::Index>(col)) =
            std::sqrt(solver.eigenvalues()(i)) * solver.eigenvectors().col(i);
    }
    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
    flip(0, 3) = flip(3, 0) = -1.0;
    flip(1, 2) = flip(2, 1) = 1.0;

    const Eigen::MatrixXcd tau = w.transpose() * flip * w;
    const Eigen::VectorXd lambda = Eigen::JacobiSVD<Eigen::MatrixXcd>(tau).singularValues();
    const double largest = lambda.maxCoeff();
    return std::max(0.0, 2.0 * largest - lambda.sum());
}

double discord_excited_measured_second(double w_n, double w_m) {
    check_simplex(w_n, w_m);
    if (w_n * w_m == 0.0) {
        return 0.0;
    }
    const double rest = std::max(0.0, 1.0 - w_n - w_m);
    const double s = std::sqrt(std::max(0.0, 1.0 - 4.0 * w_m * rest));
    const double one_minus_s = 4.0 * w_m * rest / (1.0 + s);
    const double q = 1.0 - xlog2x(w_n) - xlog2x(1.0 - w_n) + xlog2x(w_n + w_m) + xlog2x(rest) -
                     0.5 * xlog2x(one_minus_s) - 0.5 * xlog2x(1.0 + s);
    return std::max(q, 0.0);
}

double discord_excited_closed(double w_n, double w_m) {
    return std::min(discord_excited_measured_second(w_n, w_m),
                    discord_excited_measured_second(w_m, w_n));
}

double discord_polarized_measured_second(double j_nn, double j_mm) {
    check_polarized_weights(j_nn, j_mm);
    if (j_nn * j_mm == 0.0) {
        return 0.0;
    }
    auto pair_term = [](double x) { return xlog2x(1.0 - x) + xlog2x(1.0 + x); };
    const double mixed = 2.0 * std::sqrt(j_mm * (j_mm + j_nn));
    const double q = -0.5 * (pair_term(2.0 * j_nn) - pair_term(2.0 * (j_mm + j_nn)) +
                             pair_term(mixed));
    return std::max(q, 0.0);
}

double discord_polarized_closed(double j_nn, double j_mm) {
    return std::min(discord_polarized_measured_second(j_nn, j_mm),
                    discord_polarized_measured_second(j_mm, j_nn));
}

double OracleSides::symmetric() const { return std::min(measured_first, measured_second); }

namespace {

// Conditional-entropy search for a measurement on one qubit of a 4x4 state.
// `second` selects the measured factor. With R_st the 2x2 block of the other
// qubit between measured basis states s and t, the projector along the Bloch
// direction (theta, phi) leaves the unnormalized conditional operators
//   M_+- = (R00 + R11)/2 +- [cos(theta) (R00 - R11) + sin(theta) K(phi)] / 2,
//   K(phi) = e^{i phi} R01 + e^{-i phi} R10.
class MeasurementSearch {
  public:
    using Block = std::array<std::complex<double>, 3>; // (00, 11, 01) of a Hermitian 2x2

    MeasurementSearch(const Eigen::Matrix4cd &rho, bool second) {
        auto element = [&](int x, int s, int y, int t) {
            return second ? rho(2 * x + s, 2 * y + t) : rho(2 * s + x, 2 * t + y);
        };
        for (int k = 0; k < 3; ++k) {
            const int x = k == 1 ? 1 : 0;
            const int y = k == 0 ? 0 : 1;
            const auto r00 = element(x, 0, y, 0);
            const auto r11 = element(x, 1, y, 1);
            mean_[static_cast<std::size_t>(k)] = 0.5 * (r00 + r11);
            diff_[static_cast<std::size_t>(k)] = 0.5 * (r00 - r11);
            r01_[static_cast<std::size_t>(k)] = element(x, 0, y, 1);
            r10_[static_cast<std::size_t>(k)] = element(x, 1, y, 0);
        }
    }

    /// K(phi) / 2.
    [[nodiscard]] Block half_k(double phi) const {
        const std::complex<double> e = std::polar(0.5, phi);
        Block out;
        for (std::size_t k = 0; k < 3; ++k) {
            out[k] = e * r01_[k] + std::conj(e) * r10_[k];
        }
        return out;
    }

    /// sum over outcomes of p S(conditional state) at (cos theta, sin theta).
    [[nodiscard]] double conditional_entropy(double c, double s, const Block &k_half) const {
        double total = 0.0;
        for (double sign : {1.0, -1.0}) {
            Block m;
            for (std::size_t i = 0; i < 3; ++i) {
                m[i] = mean_[i] + sign * (c * diff_[i] + s * k_half[i]);
            }
            const double p = m[0].real() + m[1].real();
            if (p <= 0.0) {
                continue;
            }
            total += block_entropy_sum(m[0].real(), m[1].real(), m[2]) + xlog2x(p);
        }
        return total;
    }

  private:
    Block mean_{};
    Block diff_{};
    Block r01_{};
    Block r10_{};
};

struct GridPoint {
    double value;
    double theta;
    double phi;
};

GridPoint scan(const MeasurementSearch &search, double theta_lo, double theta_hi, double phi_lo,
               double phi_span, int grid, bool phi_inclusive) {
    GridPoint best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    const double phi_step = phi_span / (phi_inclusive ? grid - 1 : grid);
    std::vector<MeasurementSearch::Block> k_table(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k) {
        k_table[static_cast<std::size_t>(k)] = search.half_k(phi_lo + phi_step * k);
    }
    for (int i = 0; i < grid; ++i) {
        const double theta = theta_lo + (theta_hi - theta_lo) * i / (grid - 1);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (int k = 0; k < grid; ++k) {
            const double value = search.conditional_entropy(c, s, k_table[static_cast<std::size_t>(k)]);
            if (value < best.value) {
                best = {value, theta, phi_lo + phi_step * k};
            }
        }
    }
    return best;
}

double min_conditional_entropy(const Eigen::Matrix4cd &rho, bool second, int grid) {
    const MeasurementSearch search(rho, second);
    const double pi = std::numbers::pi;
    const GridPoint coarse = scan(search, 0.0, pi, 0.0, 2.0 * pi, grid, false);

    const double theta_step = pi / (grid - 1);
    const double phi_step = 2.0 * pi / grid;
    const double lo = std::max(0.0, coarse.theta - theta_step);
    const double hi = std::min(pi, coarse.theta + theta_step);
    const GridPoint fine =
        scan(search, lo, hi, coarse.phi - phi_step, 2.0 * phi_step, grid, true);
    return std::min(coarse.value, fine.value);
}

} // namespace

OracleSides discord_measurement_oracle_sides(const XState &state, int grid_size) {
    if (grid_size < 64) {
        throw InputError("oracle grid_size must be at least 64, got " + std::to_string(grid_size));
    }
    const Eigen::Matrix4cd &rho = state.matrix();
    const double s_joint = entropy_of(rho);
    // Marginal of the first factor: populations rho_00 + rho_11 | rho_22 + rho_33.
    const double s_first = block_entropy_sum((rho(0, 0) + rho(1, 1)).real(),
                                             (rho(2, 2) + rho(3, 3)).real(), rho(0, 2) + rho(1, 3));
    const double s_second = block_entropy_sum((rho(0, 0) + rho(2, 2)).real(),
                                              (rho(1, 1) + rho(3, 3)).real(), rho(0, 1) + rho(2, 3));

    // Q = I - C = S(measured) - S(joint) + min sum p_k S(other | k).
    OracleSides out{};
    out.measured_second =
        std::max(0.0, s_second - s_joint + min_conditional_entropy(rho, true, grid_size));
    out.measured_first =
        std::max(0.0, s_first - s_joint + min_conditional_entropy(rho, false, grid_size));
    return out;
}

double discord_measurement_oracle(const XState &rho, int grid_size) {
    return discord_measurement_oracle_sides(rho, grid_size).symmetric();
}

EtaReport verify_eta_minimum(double w_n, double w_m, int grid_size) {
    check_simplex(w_n, w_m);
    if (grid_size < 2) {
        throw InputError("eta grid needs at least two points");
    }

    auto p = [&](int i, double eta) {
        const double sign = i == 0 ? 1.0 : -1.0;
        return 0.5 * (1.0 + sign * eta * (1.0 - 2.0 * w_n));
    };
    auto theta = [&](int i, double eta) {
        const double sign = i == 0 ? 1.0 : -1.0;
        const double inner = 1.0 - 2.0 * w_m + sign * eta * (1.0 - 2.0 * (w_n + w_m));
        return std::sqrt((1.0 - eta * eta) * w_n * w_m + 0.25 * inner * inner) / p(i, eta);
    };
    auto f = [&](double eta) {
        double total = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double pi = p(i, eta);
            if (pi > 0.0) {
                total += pi * bloch_entropy(theta(i, eta));
            }
        }
        return total;
    };

    EtaReport report;
    report.f_values.resize(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) {
        const double eta = static_cast<double>(i) / (grid_size - 1);
        const double value = f(eta);
        report.f_values[static_cast<std::size_t>(i)] = value;
        if (value < report.f_values[static_cast<std::size_t>(report.argmin_index)]) {
            report.argmin_index = i;
        }
    }
    report.argmin_eta = static_cast<double>(report.argmin_index) / (grid_size - 1);
    report.f_at_zero = report.f_values.front();
    report.f_at_one = report.f_values.back();

    double err = 0.0;
    auto track = [&err](double got, double want) { err = std::max(err, std::abs(got - want)); };
    const double theta_zero = 2.0 * std::sqrt(w_n * w_m + 0.25 * (1.0 - 2.0 * w_m) * (1.0 - 2.0 * w_m));
    for (int i = 0; i < 2; ++i) {
        track(p(i, 0.0), 0.5);
        track(theta(i, 0.0), theta_zero);
    }
    track(p(0, 1.0), 1.0 - w_n);
    track(p(1, 1.0), w_n);
    if (w_n < 1.0) {
        track(theta(0, 1.0), std::abs(1.0 - 2.0 * w_m - w_n) / (1.0 - w_n));
    }
    if (w_n > 0.0) {
        track(theta(1, 1.0), 1.0);
    }
    report.endpoint_identity_error = err;
    return report;
}

CorrelationMatrix correlation_matrix(const StationaryProfile &profile, Measure measure,
                                     Method method, const MatrixOptions &options) {
    const bool excited = profile.kind == StateKind::excited;
    auto evaluate = [&](int n, int m) -> double {
        const double w_n = profile.weight(n);
        const double w_m = profile.weight(m);
        if (measure == Measure::discord) {
            if (method == Method::oracle) {
                return discord_measurement_oracle(reduced_xstate(profile, n, m),
                                                  options.oracle_grid);
            }
            return excited ? discord_excited_closed(w_n, w_m) : discord_polarized_closed(w_n, w_m);
        }
        if (method == Method::closed && excited) {
            return concurrence_excited(w_n, w_m);
        }
        return concurrence_wootters(reduced_xstate(profile, n, m));
    };
    auto pair_value = [&](int n, int m) -> double {
        try {
            return evaluate(n, m);
        } catch (const NumericalError &e) {
            throw NumericalError("pair (" + std::to_string(n) + ", " + std::to_string(m) +
                                 "): " + e.what());
        }
    };
    return {measure, evaluate_pairs(profile.size(), options.threads, pair_value)};
}

} // namespace xycorr
