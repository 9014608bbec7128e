// {{{ MIT License
//
// Copyright 2026 The dhpp authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
// }}}

#include <dhpp/cli.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

int main(int argc, char **argv) {
    CLI::App app{"dhpp: answer sets of disjunctive hybrid probability logic programs with probability aggregates"};
    dhpp::RunConfig config;
    std::map<std::string, dhpp::Mode> const modes{{"solve", dhpp::Mode::Solve},
                                                  {"ground-only", dhpp::Mode::GroundOnly},
                                                  {"check-model", dhpp::Mode::CheckModel},
                                                  {"translate-dlp", dhpp::Mode::TranslateDlp}};
    bool json = false;
    std::string model;
    std::string strategies;
    app.add_option("--mode", config.mode, "solve, ground-only, check-model or translate-dlp")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    app.add_option("--limit", config.limit, "maximum number of answer sets, 0 for all")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--strategies", strategies, "file with #tau and #default_tau directives")->check(CLI::ExistingFile);
    app.add_option("--max-ground", config.maxGroundRules, "cap on the number of ground rules")->check(CLI::PositiveNumber);
    app.add_option("--max-lattice", config.maxLatticeSize, "cap on lattice values per formula")->check(CLI::PositiveNumber);
    app.add_option("--model", model, "interpretation (JSON) for check-model");
    app.add_option("files", config.inputs, "program files, - for standard input");
    try {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (json) { config.format = dhpp::OutputFormat::Json; }
    if (!model.empty()) { config.model = model; }
    if (!strategies.empty()) { config.strategies = strategies; }
    if (char const *seed = std::getenv("DHPP_SEED")) {
        try {
            config.seed = std::stoull(seed);
        }
        catch (std::exception const &) {
            std::cerr << "error: DHPP_SEED must be a non-negative integer\n";
            return 2;
        }
    }
    return dhpp::run(config, std::cout, std::cerr);
}
