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

#ifndef DHPP_CLI_HH
#define DHPP_CLI_HH

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dhpp {

enum class Mode { Solve, GroundOnly, CheckModel, TranslateDlp };
enum class OutputFormat { Text, Json };

struct RunConfig {
    Mode mode = Mode::Solve;
    // program files; "-" or no file reads standard input
    std::vector<std::string> inputs;
    // 0 prints all answer sets
    size_t limit = 0;
    std::optional<std::string> strategies;
    OutputFormat format = OutputFormat::Text;
    size_t maxGroundRules = 1'000'000;
    size_t maxLatticeSize = 4096;
    // interpretation for check-model
    std::optional<std::string> model;
    std::optional<std::uint64_t> seed;
};

// Exit status: solve 0 with answer sets, 1 without; check-model 0 for p-models, 1
// otherwise; 2 on errors, reported as file:line:col: code: message on err.
int run(RunConfig const &config, std::ostream &out, std::ostream &err);

} // namespace dhpp

#endif // DHPP_CLI_HH
