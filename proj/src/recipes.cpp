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

#include <sstream>

#include "xycorr/runner.hpp"

namespace xycorr {

namespace {

using nlohmann::json;

json chain(int n, const std::string &profile) { return {{"n_sites", n}, {"profile", profile}}; }

json alternating(double delta) {
    json c = chain(41, "alternating");
    c["delta"] = delta;
    return c;
}

json three_alternating() {
    json c = chain(41, "three_alternating");
    c["d1"] = 1.0;
    c["d2"] = 0.5;
    c["d3"] = 0.25;
    return c;
}

json excited(int j) { return {{"kind", "excited"}, {"j", j}}; }
json polarized(int j) { return {{"kind", "polarized"}, {"j", j}, {"beta", 10.0}}; }

Recipe make(const std::string &name, const std::string &description, json chain_node,
            json state, json measures = json::array({"discord"})) {
    json config = {{"chain", std::move(chain_node)},
                   {"initial_state", std::move(state)},
                   {"measures", std::move(measures)},
                   {"method", "closed"},
                   {"outputs",
                    {{"matrix_csv", name + ".csv"},
                     {"summary_json", name + "_summary.json"},
                     {"clusters", true},
                     {"threshold", 1e-9}}}};
    return {name, description, std::move(config)};
}

std::vector<Recipe> build() {
    json ddi = chain(41, "homogeneous");
    ddi["range"] = "all_pairs_ddi";
    const json both = json::array({"discord", "concurrence"});

    return {
        make("fig1a", "homogeneous N=41 excited j=1 (bell-shaped discord)",
             chain(41, "homogeneous"), excited(1)),
        make("fig1b", "homogeneous N=41 excited j=7 (six discord values, zero rows n=6i)",
             chain(41, "homogeneous"), excited(7)),
        make("fig2", "DDI all-node variant of fig1b", ddi, excited(7)),
        make("fig3a", "alternating δ=0.1 N=41 excited j=14", alternating(0.1), excited(14)),
        make("fig3b", "alternating δ=0.1 N=41 excited j=13 (compare with fig3a)",
             alternating(0.1), excited(13)),
        make("fig4a", "3-alternating (1, 1/2, 1/4) N=41 excited j=2", three_alternating(),
             excited(2)),
        make("fig4b", "3-alternating (1, 1/2, 1/4) N=41 excited j=20", three_alternating(),
             excited(20)),
        make("fig4c", "3-alternating (1, 1/2, 1/4) N=41 excited j=21", three_alternating(),
             excited(21)),
        make("fig4d", "3-alternating (1, 1/2, 1/4) N=41 excited j=40", three_alternating(),
             excited(40)),
        make("fig5a", "CDEL chain N=41 excited j=1", chain(41, "cdel"), excited(1)),
        make("fig5b", "CDEL chain N=41 excited j=21", chain(41, "cdel"), excited(21)),
        make("fig6a", "homogeneous N=41 polarized j=1 β=10", chain(41, "homogeneous"),
             polarized(1)),
        make("fig6b", "homogeneous N=41 polarized j=7 β=10", chain(41, "homogeneous"),
             polarized(7)),
        make("fig7", "alternating δ=1/2 polarized j=41 β=10 (mode 21 correlates with all)",
             alternating(0.5), polarized(41)),
        make("qex", "discord values for homogeneous N=41 excited j=7",
             chain(41, "homogeneous"), excited(7)),
        make("cex", "concurrence values for homogeneous N=41 excited j=7",
             chain(41, "homogeneous"), excited(7), json::array({"concurrence"})),
        make("qpol", "discord values for homogeneous N=41 polarized j=7 β=10",
             chain(41, "homogeneous"), polarized(7)),
        make("hom_j14", "homogeneous N=41 excited j=14 (cluster 3i-1, 3i-2)",
             chain(41, "homogeneous"), excited(14), both),
        make("hom_j21", "homogeneous N=41 excited j=21 (cluster of odd modes)",
             chain(41, "homogeneous"), excited(21), both),
    };
}

} // namespace

const std::vector<Recipe> &list_recipes() {
    static const std::vector<Recipe> recipes = build();
    return recipes;
}

std::string format_recipes() {
    std::ostringstream os;
    for (const auto &r : list_recipes()) {
        os << r.name << ": " << r.description << "\n    " << r.config.dump() << "\n";
    }
    return os.str();
}

} // namespace xycorr
