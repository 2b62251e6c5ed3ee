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

#include "xycorr/runner.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "xycorr/errors.hpp"

namespace xycorr {

using nlohmann::json;

namespace {

void require_object(const json &node, const std::string &where,
                    const std::set<std::string> &allowed) {
    if (!node.is_object()) {
        throw InputError(where + ": expected an object");
    }
    for (const auto &[key, value] : node.items()) {
        if (!allowed.contains(key)) {
            throw InputError(where + "." + key + ": unknown key");
        }
    }
}

const json &field(const json &node, const std::string &where, const std::string &key) {
    if (!node.contains(key)) {
        throw InputError(where + "." + key + ": required field is missing");
    }
    return node.at(key);
}

double number(const json &node, const std::string &path) {
    if (!node.is_number()) {
        throw InputError(path + ": expected a number");
    }
    return node.get<double>();
}

int integer(const json &node, const std::string &path) {
    if (!node.is_number_integer()) {
        throw InputError(path + ": expected an integer");
    }
    return node.get<int>();
}

std::string text(const json &node, const std::string &path) {
    if (!node.is_string()) {
        throw InputError(path + ": expected a string");
    }
    return node.get<std::string>();
}

std::vector<double> numbers(const json &node, const std::string &path) {
    if (!node.is_array()) {
        throw InputError(path + ": expected an array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(number(node[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

ChainSpec parse_chain(const json &node) {
    const std::string where = "chain";
    require_object(node, where,
                   {"n_sites", "profile", "delta", "d1", "d2", "d3", "couplings", "range",
                    "positions"});
    ChainSpec spec;
    spec.n_sites = integer(field(node, where, "n_sites"), "chain.n_sites");

    const std::string profile = text(field(node, where, "profile"), "chain.profile");
    std::set<std::string> params;
    if (profile == "homogeneous") {
        spec.profile = Homogeneous{};
    } else if (profile == "cdel") {
        spec.profile = Cdel{};
    } else if (profile == "alternating") {
        params = {"delta"};
        spec.profile = Alternating{number(field(node, where, "delta"), "chain.delta")};
    } else if (profile == "three_alternating") {
        params = {"d1", "d2", "d3"};
        spec.profile = ThreeAlternating{number(field(node, where, "d1"), "chain.d1"),
                                        number(field(node, where, "d2"), "chain.d2"),
                                        number(field(node, where, "d3"), "chain.d3")};
    } else if (profile == "explicit") {
        params = {"couplings"};
        spec.profile = Explicit{numbers(field(node, where, "couplings"), "chain.couplings")};
    } else {
        throw InputError("chain.profile: unknown profile '" + profile + "'");
    }
    for (const char *key : {"delta", "d1", "d2", "d3", "couplings"}) {
        if (node.contains(key) && !params.contains(key)) {
            throw InputError(std::string("chain.") + key + ": not a parameter of profile '" +
                             profile + "'");
        }
    }

    if (node.contains("range")) {
        const std::string range = text(node.at("range"), "chain.range");
        if (range == "nearest_neighbor") {
            spec.range = InteractionRange::nearest_neighbor;
        } else if (range == "all_pairs_ddi") {
            spec.range = InteractionRange::all_pairs_ddi;
        } else {
            throw InputError("chain.range: unknown range '" + range + "'");
        }
    }
    if (node.contains("positions")) {
        spec.positions = numbers(node.at("positions"), "chain.positions");
    }
    try {
        spec.validate();
    } catch (const InputError &e) {
        throw InputError(std::string("chain: ") + e.what());
    }
    return spec;
}

InitialState parse_initial_state(const json &node, int n_sites) {
    const std::string where = "initial_state";
    require_object(node, where, {"kind", "j", "beta"});
    InitialState state;
    const std::string kind = text(field(node, where, "kind"), "initial_state.kind");
    if (kind == "excited") {
        state.kind = StateKind::excited;
    } else if (kind == "polarized") {
        state.kind = StateKind::polarized;
    } else {
        throw InputError("initial_state.kind: expected 'excited' or 'polarized', got '" + kind +
                         "'");
    }
    state.j = integer(field(node, where, "j"), "initial_state.j");
    if (state.j < 1 || state.j > n_sites) {
        throw InputError("initial_state.j: must lie in 1.." + std::to_string(n_sites));
    }
    if (state.kind == StateKind::polarized) {
        state.beta = number(field(node, where, "beta"), "initial_state.beta");
        if (*state.beta < 0.0) {
            throw InputError("initial_state.beta: must be non-negative");
        }
    } else if (node.contains("beta")) {
        throw InputError("initial_state.beta: only allowed for kind 'polarized'");
    }
    return state;
}

OutputOptions parse_outputs(const json &node) {
    require_object(node, "outputs", {"matrix_csv", "summary_json", "clusters", "threshold"});
    OutputOptions out;
    if (node.contains("matrix_csv")) {
        out.matrix_csv = text(node.at("matrix_csv"), "outputs.matrix_csv");
    }
    if (node.contains("summary_json")) {
        out.summary_json = text(node.at("summary_json"), "outputs.summary_json");
    }
    if (node.contains("clusters")) {
        if (!node.at("clusters").is_boolean()) {
            throw InputError("outputs.clusters: expected true or false");
        }
        out.clusters = node.at("clusters").get<bool>();
    }
    if (node.contains("threshold")) {
        out.threshold = number(node.at("threshold"), "outputs.threshold");
        if (!(out.threshold > 0.0)) {
            throw InputError("outputs.threshold: must be positive");
        }
    }
    return out;
}

const char *to_string(MethodChoice method) {
    switch (method) {
    case MethodChoice::closed:
        return "closed";
    case MethodChoice::oracle:
        return "oracle";
    default:
        return "both";
    }
}

json chain_to_json(const ChainSpec &spec) {
    json out = {{"n_sites", spec.n_sites},
                {"profile", profile_name(spec.profile)},
                {"range", range_name(spec.range)}};
    if (const auto *p = std::get_if<Alternating>(&spec.profile)) {
        out["delta"] = p->delta;
    } else if (const auto *p3 = std::get_if<ThreeAlternating>(&spec.profile)) {
        out["d1"] = p3->d1;
        out["d2"] = p3->d2;
        out["d3"] = p3->d3;
    } else if (const auto *pe = std::get_if<Explicit>(&spec.profile)) {
        out["couplings"] = pe->couplings;
    }
    if (spec.positions) {
        out["positions"] = *spec.positions;
    }
    return out;
}

json modes_json(const std::vector<ModeSet> &sets) {
    json out = json::array();
    for (const auto &s : sets) {
        out.push_back(s);
    }
    return out;
}

void check_writable(const std::filesystem::path &path, const std::string &field_name) {
    const auto parent = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    if (!std::filesystem::is_directory(parent)) {
        throw InputError(field_name + ": directory '" + parent.string() + "' does not exist");
    }
}

} // namespace

RunConfig parse_config(const json &doc) {
    require_object(doc, "config",
                   {"chain", "initial_state", "measures", "method", "oracle_grid",
                    "stationarity_taus", "outputs"});
    RunConfig config;
    config.chain = parse_chain(field(doc, "config", "chain"));
    config.initial_state =
        parse_initial_state(field(doc, "config", "initial_state"), config.chain.n_sites);
    if (config.initial_state.kind == StateKind::polarized &&
        config.chain.range == InteractionRange::all_pairs_ddi) {
        throw InputError("initial_state.kind: the polarized state is defined for "
                         "nearest_neighbor chains only");
    }

    const json &measures = field(doc, "config", "measures");
    if (!measures.is_array() || measures.empty()) {
        throw InputError("measures: expected a non-empty array");
    }
    for (std::size_t i = 0; i < measures.size(); ++i) {
        const std::string path = "measures[" + std::to_string(i) + "]";
        const std::string name = text(measures[i], path);
        Measure m;
        if (name == "discord") {
            m = Measure::discord;
        } else if (name == "concurrence") {
            m = Measure::concurrence;
        } else {
            throw InputError(path + ": unknown measure '" + name + "'");
        }
        if (std::find(config.measures.begin(), config.measures.end(), m) != config.measures.end()) {
            throw InputError(path + ": duplicate measure '" + name + "'");
        }
        config.measures.push_back(m);
    }

    if (doc.contains("method")) {
        const std::string method = text(doc.at("method"), "method");
        if (method == "closed") {
            config.method = MethodChoice::closed;
        } else if (method == "oracle") {
            config.method = MethodChoice::oracle;
        } else if (method == "both") {
            config.method = MethodChoice::both;
        } else {
            throw InputError("method: expected 'closed', 'oracle' or 'both'");
        }
    }
    if (doc.contains("oracle_grid")) {
        config.oracle_grid = integer(doc.at("oracle_grid"), "oracle_grid");
        if (config.oracle_grid < 64) {
            throw InputError("oracle_grid: must be at least 64");
        }
    }
    if (doc.contains("stationarity_taus")) {
        config.stationarity_taus = numbers(doc.at("stationarity_taus"), "stationarity_taus");
        if (config.stationarity_taus.empty()) {
            throw InputError("stationarity_taus: must not be empty when present");
        }
    }
    if (doc.contains("outputs")) {
        config.outputs = parse_outputs(doc.at("outputs"));
    }
    return config;
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open config file '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError("config file '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

json config_to_json(const RunConfig &config) {
    json doc;
    doc["chain"] = chain_to_json(config.chain);
    json state = {{"kind", to_string(config.initial_state.kind)}, {"j", config.initial_state.j}};
    if (config.initial_state.beta) {
        state["beta"] = *config.initial_state.beta;
    }
    doc["initial_state"] = state;
    doc["measures"] = json::array();
    for (Measure m : config.measures) {
        doc["measures"].push_back(to_string(m));
    }
    doc["method"] = to_string(config.method);
    doc["oracle_grid"] = config.oracle_grid;
    if (!config.stationarity_taus.empty()) {
        doc["stationarity_taus"] = config.stationarity_taus;
    }
    json outputs = {{"clusters", config.outputs.clusters},
                    {"threshold", config.outputs.threshold}};
    if (config.outputs.matrix_csv) {
        outputs["matrix_csv"] = config.outputs.matrix_csv->string();
    }
    if (config.outputs.summary_json) {
        outputs["summary_json"] = config.outputs.summary_json->string();
    }
    doc["outputs"] = outputs;
    return doc;
}

RunResult execute(const RunConfig &config, int threads) {
    RunResult result;
    const CouplingMatrix couplings = build_couplings(config.chain);
    result.spectrum = diagonalize(build_hamiltonian(couplings));
    result.profile = stationary_profile(result.spectrum, config.initial_state.kind,
                                        config.initial_state.j, config.initial_state.beta);

    for (auto &c : equal_weight_classes(result.profile)) {
        if (c.weight == 0.0) {
            result.zero_nodes = std::move(c.members);
        } else {
            result.classes.push_back(std::move(c));
        }
    }

    MatrixOptions options;
    options.oracle_grid = config.oracle_grid;
    options.threads = threads;

    json measures = json::object();
    for (Measure measure : config.measures) {
        MeasureResult mr;
        const Method primary =
            config.method == MethodChoice::oracle ? Method::oracle : Method::closed;
        mr.matrix = correlation_matrix(result.profile, measure, primary, options);
        if (config.method == MethodChoice::both) {
            const CorrelationMatrix oracle =
                correlation_matrix(result.profile, measure, Method::oracle, options);
            mr.closed_oracle_discrepancy =
                (mr.matrix.values - oracle.values).cwiseAbs().maxCoeff();
        }
        if (config.outputs.clusters) {
            mr.clusters = extract_clusters(mr.matrix, config.outputs.threshold);
        }

        json entry = {{"distinct_values", distinct_values(mr.matrix)},
                      {"spread", spread(mr.matrix)},
                      {"max_value", mr.matrix.values.maxCoeff()}};
        if (mr.closed_oracle_discrepancy) {
            entry["max_closed_oracle_discrepancy"] = *mr.closed_oracle_discrepancy;
        }
        if (config.outputs.clusters) {
            entry["clusters"] = modes_json(mr.clusters);
            entry["threshold"] = config.outputs.threshold;
        }
        measures[to_string(measure)] = entry;
        result.measures.push_back(std::move(mr));
    }

    if (!config.stationarity_taus.empty()) {
        StationarityOptions so;
        so.threads = threads;
        result.stationarity =
            stationarity_report(result.spectrum, config.initial_state.kind, config.initial_state.j,
                                config.initial_state.beta, config.stationarity_taus, so);
    }

    json classes = json::array();
    for (const auto &c : result.classes) {
        classes.push_back({{"weight", c.weight}, {"members", c.members}});
    }
    json summary;
    summary["version"] = version_string;
    summary["config"] = config_to_json(config);
    summary["eigenvalues"] =
        std::vector<double>(result.spectrum.eigenvalues.begin(), result.spectrum.eigenvalues.end());
    summary["weights"] = result.profile.weights;
    summary["zero_nodes"] = result.zero_nodes;
    summary["classes"] = classes;
    summary["measures"] = measures;
    if (result.stationarity) {
        const auto &s = *result.stationarity;
        summary["stationarity"] = {{"taus", s.taus},
                                   {"discord_deviation", s.discord_deviation},
                                   {"concurrence_deviation", s.concurrence_deviation},
                                   {"max_deviation", s.max_deviation()}};
    }
    result.summary = std::move(summary);
    return result;
}

std::filesystem::path matrix_path(const RunConfig &config, Measure measure) {
    const std::filesystem::path base = config.outputs.matrix_csv.value();
    if (config.measures.size() == 1) {
        return base;
    }
    std::filesystem::path out = base;
    out.replace_filename(base.stem().string() + "_" + to_string(measure) +
                         base.extension().string());
    return out;
}

void write_matrix_csv(std::ostream &os, const CorrelationMatrix &matrix) {
    char buffer[32];
    const int n = matrix.size();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            std::snprintf(buffer, sizeof buffer, "%.12g", matrix.values(a, b));
            os << buffer << (b + 1 < n ? "," : "\n");
        }
    }
}

void write_artifacts(const RunConfig &config, const RunResult &result) {
    auto open = [](const std::filesystem::path &path) {
        std::ofstream os(path, std::ios::binary);
        if (!os) {
            throw InputError("cannot write '" + path.string() + "'");
        }
        return os;
    };

    if (config.outputs.matrix_csv) {
        for (std::size_t i = 0; i < config.measures.size(); ++i) {
            const auto path = matrix_path(config, config.measures[i]);
            const CorrelationMatrix &matrix = result.measures[i].matrix;
            {
                auto os = open(path);
                write_matrix_csv(os, matrix);
            }
            std::vector<int> labels(static_cast<std::size_t>(matrix.size()));
            for (int n = 1; n <= matrix.size(); ++n) {
                labels[static_cast<std::size_t>(n - 1)] = n;
            }
            const json sidecar = {{"measure", to_string(matrix.measure)},
                                  {"rows", labels},
                                  {"columns", labels},
                                  {"row_meaning", "eigenmode n"},
                                  {"column_meaning", "eigenmode m"},
                                  {"config", config_to_json(config)}};
            auto os = open(path.string() + ".json");
            os << sidecar.dump(2) << "\n";
        }
    }
    if (config.outputs.summary_json) {
        auto os = open(*config.outputs.summary_json);
        os << result.summary.dump(2) << "\n";
    }
}

int run(const std::filesystem::path &config_path, int threads, std::ostream &out,
        std::ostream &err) {
    RunConfig config;
    try {
        config = load_config(config_path);
        if (config.outputs.matrix_csv) {
            check_writable(*config.outputs.matrix_csv, "outputs.matrix_csv");
        }
        if (config.outputs.summary_json) {
            check_writable(*config.outputs.summary_json, "outputs.summary_json");
        }
    } catch (const InputError &e) {
        err << "config error: " << e.what() << "\n";
        return exit_config_error;
    }

    try {
        const RunResult result = execute(config, threads);
        write_artifacts(config, result);
        if (!config.outputs.summary_json) {
            out << result.summary.dump(2) << "\n";
        }
        for (const auto &mr : result.measures) {
            if (mr.closed_oracle_discrepancy) {
                out << to_string(mr.matrix.measure)
                    << ": max closed-vs-oracle discrepancy = " << *mr.closed_oracle_discrepancy
                    << "\n";
            }
        }
    } catch (const NumericalError &e) {
        err << "numerical failure: " << e.what() << "\n";
        return exit_numerical_error;
    } catch (const InputError &e) {
        err << "config error: " << e.what() << "\n";
        return exit_config_error;
    }
    return exit_ok;
}

} // namespace xycorr
