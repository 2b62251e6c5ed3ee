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

#include "xycorr/chain_model.hpp"

#include <cmath>
#include <sstream>

#include "xycorr/errors.hpp"

namespace xycorr {

namespace {

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double value, const char *what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream os;
        os << what << " must be a finite positive number, got " << value;
        throw InputError(os.str());
    }
}

std::vector<double> bond_couplings(const ChainSpec &spec) {
    const int n = spec.n_sites;
    std::vector<double> bonds(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
        auto &b = bonds[static_cast<std::size_t>(i - 1)];
        b = std::visit(
            Overloaded{
                [](const Homogeneous &) { return 1.0; },
                [i](const Alternating &p) { return i % 2 == 1 ? 1.0 : p.delta; },
                [i](const ThreeAlternating &p) {
                    switch ((i - 1) % 3) {
                    case 0:
                        return p.d1;
                    case 1:
                        return p.d2;
                    default:
                        return p.d3;
                    }
                },
                [i, n](const Cdel &) {
                    return std::sqrt(static_cast<double>(i) * (n - i) / (n - 1));
                },
                [i](const Explicit &p) {
                    return p.couplings[static_cast<std::size_t>(i - 1)];
                },
            },
            spec.profile);
    }
    return bonds;
}

} // namespace

std::string profile_name(const CouplingProfile &profile) {
    return std::visit(Overloaded{
                          [](const Homogeneous &) { return "homogeneous"; },
                          [](const Alternating &) { return "alternating"; },
                          [](const ThreeAlternating &) {
                              return "three_alternating";
                          },
                          [](const Cdel &) { return "cdel"; },
                          [](const Explicit &) { return "explicit"; },
                      },
                      profile);
}

std::string range_name(InteractionRange range) {
    return range == InteractionRange::nearest_neighbor ? "nearest_neighbor"
                                                       : "all_pairs_ddi";
}

void ChainSpec::validate() const {
    if (n_sites < 2) {
        throw InputError("n_sites must be at least 2, got " +
                         std::to_string(n_sites));
    }
    std::visit(Overloaded{
                   [](const Homogeneous &) {},
                   [](const Cdel &) {},
                   [](const Alternating &p) { require_positive(p.delta, "delta"); },
                   [](const ThreeAlternating &p) {
                       require_positive(p.d1, "d1");
                       require_positive(p.d2, "d2");
                       require_positive(p.d3, "d3");
                   },
                   [this](const Explicit &p) {
                       if (static_cast<int>(p.couplings.size()) != n_sites - 1) {
                           throw InputError(
                               "couplings must hold n_sites - 1 = " +
                               std::to_string(n_sites - 1) + " values, got " +
                               std::to_string(p.couplings.size()));
                       }
                       for (double c : p.couplings) {
                           require_positive(c, "coupling");
                       }
                   },
               },
               profile);

    if (positions) {
        const auto &xi = *positions;
        if (static_cast<int>(xi.size()) != n_sites) {
            throw InputError("positions must hold n_sites values");
        }
        for (std::size_t i = 1; i < xi.size(); ++i) {
            if (!(xi[i] > xi[i - 1])) {
                throw InputError("positions must be strictly increasing");
            }
        }
        if (std::abs((xi[1] - xi[0]) - 1.0) > 1e-12) {
            throw InputError("positions must satisfy xi_2 - xi_1 = 1");
        }
    }

    if (range == InteractionRange::all_pairs_ddi && !positions &&
        !std::holds_alternative<Homogeneous>(profile)) {
        throw InputError("all_pairs_ddi with a '" + profile_name(profile) +
                         "' profile needs explicit positions");
    }
}

CouplingMatrix build_couplings(const ChainSpec &spec) {
    spec.validate();
    const int n = spec.n_sites;
    CouplingMatrix out{Eigen::MatrixXd::Zero(n, n)};

    if (spec.range == InteractionRange::nearest_neighbor) {
        const auto bonds = bond_couplings(spec);
        for (int i = 0; i + 1 < n; ++i) {
            out.d(i, i + 1) = out.d(i + 1, i) = bonds[static_cast<std::size_t>(i)];
        }
        return out;
    }

    std::vector<double> xi(static_cast<std::size_t>(n));
    if (spec.positions) {
        xi = *spec.positions;
    } else {
        for (int i = 0; i < n; ++i) {
            xi[static_cast<std::size_t>(i)] = i;
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const double r = xi[static_cast<std::size_t>(b)] -
                             xi[static_cast<std::size_t>(a)];
            out.d(a, b) = out.d(b, a) = 1.0 / (r * r * r);
        }
    }
    return out;
}

HamiltonianMatrix build_hamiltonian(const CouplingMatrix &d) {
    HamiltonianMatrix out{0.5 * d.d};
    out.h.diagonal().setZero();
    return out;
}

} // namespace xycorr
