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

#include <dhpp/classical.hh>
#include <dhpp/cli.hh>
#include <dhpp/grounder.hh>
#include <dhpp/model_io.hh>
#include <dhpp/parser.hh>
#include <dhpp/printer.hh>
#include <dhpp/solver.hh>

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace dhpp {

namespace {

std::string readFile(std::string const &path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) { throw Error(ErrorCode::IoError, "cannot open file '" + path + "'"); }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::pair<std::string, std::string>> readInputs(RunConfig const &config) {
    std::vector<std::pair<std::string, std::string>> res;
    auto inputs = config.inputs;
    if (inputs.empty()) { inputs.push_back("-"); }
    for (auto const &path : inputs) { res.emplace_back(path == "-" ? "<stdin>" : path, readFile(path)); }
    return res;
}

Program loadProgram(RunConfig const &config) {
    Program res;
    TauMap defaults;
    for (auto const &[name, text] : readInputs(config)) {
        ParseOptions options;
        options.file = name;
        auto part = parseProgram(text, options).program;
        for (auto &rule : part.rules) { res.rules.push_back(std::move(rule)); }
        for (auto const &[pred, rho] : part.tau.byPredicate) { res.tau.byPredicate[pred] = rho; }
        if (part.tau.defaultStrategy != defaults.defaultStrategy) { res.tau.defaultStrategy = part.tau.defaultStrategy; }
    }
    if (config.strategies) { applyStrategyConfig(res, readFile(*config.strategies), *config.strategies); }
    return res;
}

GroundProgram ground(RunConfig const &config) {
    GroundingOptions options;
    options.maxGroundRules = config.maxGroundRules;
    return groundProgram(loadProgram(config), options);
}

SolverOptions solverOptions(RunConfig const &config) {
    SolverOptions options;
    options.limit = config.limit;
    options.maxLatticeSize = config.maxLatticeSize;
    options.seed = config.seed;
    return options;
}

void printModel(std::ostream &out, PInterpretation const &h) {
    for (auto const &[formula, value] : h.support()) { out << toString(formula) << " : " << toString(value) << "\n"; }
}

int solve(RunConfig const &config, std::ostream &out) {
    auto prg = ground(config);
    auto res = enumerateAnswerSets(prg, solverOptions(config));
    if (config.format == OutputFormat::Json) {
        out << writeModels(res.interpretations, 2) << "\n";
    }
    else if (res.interpretations.empty()) {
        out << "no answer sets\n";
    }
    else {
        for (size_t i = 0; i < res.interpretations.size(); ++i) {
            out << "Answer: " << i + 1 << "\n";
            printModel(out, res.interpretations[i]);
        }
        out << "Models: " << res.interpretations.size() << (res.truncated ? "+" : "") << "\n";
    }
    return res.interpretations.empty() ? 1 : 0;
}

int checkModel(RunConfig const &config, std::ostream &out) {
    if (!config.model) { throw Error(ErrorCode::InvalidModel, "check-model needs --model FILE"); }
    auto prg = ground(config);
    auto h = readModel(readFile(*config.model));
    auto v = prg.valuation(h);
    // compound formulae missing from the model take the composition of their atoms
    for (FormulaId id = 0; id < prg.formulas().size(); ++id) {
        auto const &info = prg.formula(id);
        if (!info.isAtom() && h.lookup(info.formula) == ProbInterval::zero()) { v[id] = compose(prg, v, id); }
    }
    bool outside = false;
    for (auto const &[formula, value] : h.support()) { outside = outside || !prg.find(formula); }
    auto report = checkProgram(prg, v);
    bool answer = false;
    std::optional<std::string> minimality;
    if (report.satisfied() && !outside) {
        auto red = reduct(prg, v);
        auto min = checkMinimality(red, v, solverOptions(config));
        answer = min.minimal;
        if (min.witness) {
            std::ostringstream ss;
            bool first = true;
            for (auto const &[formula, value] : prg.interpretation(*min.witness).support()) {
                ss << (first ? "" : ", ") << toString(formula) << " : " << toString(value);
                first = false;
            }
            minimality = "smaller p-model of the reduct: {" + ss.str() + "}";
        }
    }
    else if (report.satisfied()) {
        minimality = "the model assigns values to formulae outside the program";
    }
    if (config.format == OutputFormat::Json) {
        nlohmann::json doc{{"p_model", report.satisfied()}, {"answer_set", answer}};
        if (report.witness) { doc["witness"] = *report.witness; }
        if (minimality) { doc["minimality"] = *minimality; }
        doc["rules"] = report.rules;
        out << doc.dump(2) << "\n";
    }
    else {
        out << (report.satisfied() ? "p-model" : "not a p-model") << "\n";
        if (report.witness) { out << "  " << *report.witness << "\n"; }
        if (report.satisfied()) {
            out << (answer ? "answer set" : "not an answer set") << "\n";
            if (minimality) { out << "  " << *minimality << "\n"; }
        }
    }
    return report.satisfied() ? 0 : 1;
}

int translate(RunConfig const &config, std::ostream &out) {
    ClassicalProgram prg;
    for (auto const &[name, text] : readInputs(config)) {
        auto part = parseClassical(text, name);
        for (auto &rule : part.rules) { prg.rules.push_back(std::move(rule)); }
    }
    out << toString(translateDlp(prg));
    return 0;
}

} // namespace

int run(RunConfig const &config, std::ostream &out, std::ostream &err) {
    try {
        switch (config.mode) {
            case Mode::Solve: return solve(config, out);
            case Mode::GroundOnly: out << toString(ground(config)); return 0;
            case Mode::CheckModel: return checkModel(config, out);
            case Mode::TranslateDlp: return translate(config, out);
        }
    }
    catch (Error const &e) {
        err << "error: " << e.what() << "\n";
    }
    catch (std::exception const &e) {
        err << "error: " << e.what() << "\n";
    }
    return 2;
}

} // namespace dhpp
