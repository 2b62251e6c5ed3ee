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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "xycorr/chain_model.hpp"
#include "xycorr/dynamics.hpp"
#include "xycorr/errors.hpp"
#include "xycorr/spectral.hpp"

using namespace xycorr;

namespace {

SpectralDecomposition spectrum(int n, CouplingProfile profile) {
    return diagonalize(build_hamiltonian(
        build_couplings(ChainSpec{n, std::move(profile), InteractionRange::nearest_neighbor, std::nullopt})));
}

} // namespace

TEST_CASE("initial excited state in the eigenbasis") {
    SUBCASE("N = 3, j = 1 by hand") {
        const auto state = initial_excited_state(spectrum(3, Homogeneous{}), 1);
        const double s = std::sqrt(2.0) / 4;
        Eigen::Matrix3d expected;
        expected << 0.25, s, 0.25, s, 0.5, s, 0.25, s, 0.25;
        CHECK((state.rho.cwiseAbs() - expected).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(state.time == 0.0);
    }

    SUBCASE("unit trace, rank one, diagonal equals the stationary weights") {
        for (int j : {1, 7, 20, 41}) {
            const auto dec = spectrum(41, Alternating{0.3});
            const auto state = initial_excited_state(dec, j);
            CHECK(std::abs(state.rho.trace() - 1.0) < 1e-13);
            CHECK((state.rho * state.rho - state.rho).cwiseAbs().maxCoeff() < 1e-13);
            const auto p = stationary_profile(dec, StateKind::excited, j);
            for (int n = 1; n <= 41; ++n) {
                CHECK(std::abs(state.rho(n - 1, n - 1).real() - p.weight(n)) < 1e-15);
            }
        }
    }

    CHECK_THROWS_AS((void)initial_excited_state(spectrum(5, Homogeneous{}), 6), InputError);
}

TEST_CASE("evolution in the eigenbasis") {
    const auto dec = spectrum(41, ThreeAlternating{1.0, 0.5, 0.2});
    const auto start = initial_excited_state(dec, 14);

    CHECK((evolve(start, 0.0).rho - start.rho).cwiseAbs().maxCoeff() == 0.0);

    for (double tau : {0.5, 1.0, 10.0, 100.0}) {
        const auto next = evolve(start, tau);
        CHECK(next.time == tau);
        CHECK((next.rho.cwiseAbs() - start.rho.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-13);
        CHECK((next.rho.diagonal() - start.rho.diagonal()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((next.rho - next.rho.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
        Eigen::JacobiSVD<Eigen::MatrixXcd> a(start.rho);
        Eigen::JacobiSVD<Eigen::MatrixXcd> b(next.rho);
        CHECK((a.singularValues() - b.singularValues()).cwiseAbs().maxCoeff() < 1e-12);
    }

    const auto twice = evolve(evolve(start, 3.0), 4.0);
    CHECK(twice.time == 7.0);
    CHECK((twice.rho - evolve(start, 7.0).rho).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("eigenbasis evolution agrees with full Hilbert-space evolution") {
    const int n = 5;
    const CouplingMatrix d = build_couplings(ChainSpec{n, Homogeneous{}, InteractionRange::all_pairs_ddi, std::nullopt});
    const auto dec = diagonalize(build_hamiltonian(d));
    const Eigen::MatrixXcd big = testing::brute_force_xy(d.d);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(big);

    const int j = 2;
    const double tau = 2.3;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(big.rows());
    psi(testing::single_flip_index(n, j - 1)) = 1.0;
    const Eigen::VectorXcd phases =
        (solver.eigenvalues().cast<std::complex<double>>() * std::complex<double>(0.0, -tau)).array().exp();
    const Eigen::VectorXcd psi_t = solver.eigenvectors() * phases.asDiagonal() *
                                   solver.eigenvectors().adjoint() * psi;

    // site-basis single-excitation amplitudes, then rotate into the eigenbasis
    Eigen::VectorXcd site(n);
    for (int s = 0; s < n; ++s) {
        site(s) = psi_t(testing::single_flip_index(n, s));
    }
    CHECK(std::abs(site.squaredNorm() - 1.0) < 1e-12);
    const Eigen::VectorXcd mode = dec.modes.cast<std::complex<double>>() * site;
    const Eigen::MatrixXcd expected = mode * mode.adjoint();

    const auto evolved = evolve(initial_excited_state(dec, j), tau);
    CHECK((evolved.rho - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("stationarity of every pairwise measure") {
    const std::vector<double> taus{0.0, 1.0, 10.0, 100.0};

    SUBCASE("excited j = 7, homogeneous") {
        const auto report = stationarity_report(spectrum(41, Homogeneous{}), StateKind::excited, 7,
                                                std::nullopt, taus);
        REQUIRE(report.discord_deviation.size() == 4);
        CHECK(report.discord_deviation[0] == 0.0);
        CHECK(report.max_deviation() <= 1e-12);
    }

    SUBCASE("polarized j = 14, beta = 10, alternating") {
        const auto report = stationarity_report(spectrum(41, Alternating{0.5}), StateKind::polarized, 14,
                                                10.0, taus);
        CHECK(report.max_discord_deviation <= 1e-12);
        CHECK(report.max_concurrence_deviation <= 1e-12);
    }

    SUBCASE("argument errors") {
        const auto dec = spectrum(5, Homogeneous{});
        CHECK_THROWS_AS((void)stationarity_report(dec, StateKind::excited, 1, std::nullopt, {}), InputError);
        CHECK_THROWS_AS((void)stationarity_report(dec, StateKind::polarized, 1, std::nullopt, taus),
                        InputError);
    }
}
