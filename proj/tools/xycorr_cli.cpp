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

#include <iostream>

#include "CLI11.hpp"

#include "xycorr/runner.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Stationary pairwise discord and concurrence among eigenmodes of XY chains"};
    app.require_subcommand(1);

    int threads = 1;
    app.add_option("--threads", threads, "worker threads for pairwise evaluation")
        ->check(CLI::Range(1, 256));

    std::string config_path;
    auto *run = app.add_subcommand("run", "execute a JSON run configuration");
    run->add_option("config", config_path, "path to the run configuration")->required();
    run->add_option("--threads", threads, "worker threads for pairwise evaluation")
        ->check(CLI::Range(1, 256));

    std::string recipe_name;
    auto *recipes = app.add_subcommand("recipes", "list ready-made configurations");
    recipes->add_option("name", recipe_name, "print the configuration of a single recipe");

    app.add_subcommand("version", "print the version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : xycorr::exit_config_error;
    }

    if (*run) {
        return xycorr::run(config_path, threads, std::cout, std::cerr);
    }
    if (*recipes) {
        if (recipe_name.empty()) {
            std::cout << xycorr::format_recipes();
            return 0;
        }
        for (const auto &r : xycorr::list_recipes()) {
            if (r.name == recipe_name) {
                std::cout << r.config.dump(2) << "\n";
                return 0;
            }
        }
        std::cerr << "unknown recipe '" << recipe_name << "'\n";
        return xycorr::exit_config_error;
    }
    std::cout << "xycorr " << xycorr::version_string << "\n";
    return 0;
}
