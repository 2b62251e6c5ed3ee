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

#include "xycorr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "xycorr/errors.hpp"

namespace xycorr {

namespace {

constexpr double significant_component = 1e-12;

double off_diagonal_norm(const Eigen::MatrixXd &a) {
    double sum = 0.0;
    for (Eigen::Index p = 0; p < a.rows(); ++p) {
        for (Eigen::Index q = p + 1; q < a.cols(); ++q) {
            sum += a(p, q) * a(p, q);
        }
    }
    return std::sqrt(2.0 * sum);
}

Eigen::Index first_significant(const Eigen::VectorXd &v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > significant_component) {
            return i;
        }
    }
    return v.size();
}

// Sort modes by descending eigenvalue, then reorder runs of (near-)equal
// eigenvalues by first significant site and fix the sign of every mode.
SpectralDecomposition canonicalize(const Eigen::VectorXd &values,
                                   const Eigen::MatrixXd &vectors_as_columns) {
    const Eigen::Index n = values.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return values(a) > values(b);
    });

    std::vector<Eigen::Index> lead(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        lead[static_cast<std::size_t>(i)] = first_significant(vectors_as_columns.col(i));
    }

    auto begin = order.begin();
    while (begin != order.end()) {
        auto end = std::next(begin);
        while (end != order.end() &&
               std::abs(values(*std::prev(end)) - values(*end)) < degeneracy_tol) {
            ++end;
        }
        std::stable_sort(begin, end, [&](Eigen::Index a, Eigen::Index b) {
            return lead[static_cast<std::size_t>(a)] < lead[static_cast<std::size_t>(b)];
        });
        begin = end;
    }

    SpectralDecomposition out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        Eigen::VectorXd v = vectors_as_columns.col(src);
        const Eigen::Index i = lead[static_cast<std::size_t>(src)];
        if (i < n && v(i) < 0.0) {
            v = -v;
        }
        out.eigenvalues(k) = values(src);
        out.modes.row(k) = v.transpose();
    }
    return out;
}

} // namespace

SpectralDecomposition diagonalize(const HamiltonianMatrix &hm, const JacobiOptions &options) {
    Eigen::MatrixXd a = hm.h;
    const Eigen::Index n = a.rows();
    if (a.cols() != n) {
        throw InputError("Hamiltonian must be square");
    }
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, a.cwiseAbs().maxCoeff())) {
        throw InputError("Hamiltonian must be symmetric");
    }

    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double target = options.tolerance * std::max(1.0, a.norm());

    int sweep = 0;
    while (off_diagonal_norm(a) >= target) {
        if (sweep == options.max_sweeps) {
            throw NumericalError("Jacobi eigensolver did not converge in " +
                                 std::to_string(options.max_sweeps) + " sweeps");
        }
        ++sweep;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                // Rotation angle that annihilates a(p, q); t = tan(angle),
                // taking the smaller root for stability.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    return canonicalize(a.diagonal(), v);
}

SpectralDecomposition analytic_homogeneous(int n_sites) {
    if (n_sites < 2) {
        throw InputError("analytic_homogeneous needs N >= 2");
    }
    const int n = n_sites;
    const double scale = std::sqrt(2.0 / (n + 1));
    SpectralDecomposition out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
    for (int k = 1; k <= n; ++k) {
        out.eigenvalues(k - 1) = std::cos(std::numbers::pi * k / (n + 1));
        for (int j = 1; j <= n; ++j) {
            out.modes(k - 1, j - 1) = scale * std::sin(std::numbers::pi * k * j / (n + 1));
        }
    }
    return out;
}

SpectralDecomposition analytic_alternating_limit(int n_sites, double d1) {
    if (n_sites < 3 || n_sites % 2 == 0) {
        throw InputError("analytic_alternating_limit needs odd N >= 3, got " +
                         std::to_string(n_sites));
    }
    if (!(d1 > 0.0)) {
        throw InputError("analytic_alternating_limit needs d1 > 0");
    }
    const int n = n_sites;
    const int middle = (n + 1) / 2;
    const double scale = std::sqrt(2.0 / (n + 1));
    SpectralDecomposition out{Eigen::VectorXd(n), Eigen::MatrixXd::Zero(n, n)};

    for (int k = 1; k <= n; ++k) {
        if (k == middle) {
            out.eigenvalues(k - 1) = 0.0;
            out.modes(k - 1, n - 1) = 1.0;
            continue;
        }
        const double lambda = k < middle ? d1 : -d1;
        out.eigenvalues(k - 1) = 0.5 * lambda;
        for (int j = 1; j <= n; ++j) {
            const double arg = j % 2 == 1 ? std::numbers::pi * k * (j + 1) / (n + 1)
                                          : std::numbers::pi * k * j / (n + 1);
            const double prefactor = j % 2 == 1 ? d1 / lambda : 1.0;
            out.modes(k - 1, j - 1) = prefactor * scale * std::sin(arg);
        }
        out.modes.row(k - 1).normalize();
    }
    return out;
}

} // namespace xycorr
