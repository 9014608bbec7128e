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

#ifndef DHPP_ERROR_HH
#define DHPP_ERROR_HH

#include <optional>
#include <stdexcept>
#include <string>

namespace dhpp {

enum class ErrorCode {
    SyntaxError,
    ConstantOutOfRange,
    UnknownAggregateFunction,
    UnknownAnnotationFunction,
    UnknownStrategy,
    StrategyKindMismatch,
    UnsafeVariable,
    InvalidInterval,
    DuplicateName,
    EmptyMultiset,
    UniverseOverflow,
    UnboundAnnotationVariable,
    EvaluationError,
    SearchSpaceOverflow,
    UnsupportedConstruct,
    TooLarge,
    InvalidModel,
    IoError,
};

char const *toString(ErrorCode code);

struct Location {
    std::string file;
    unsigned line = 0;
    unsigned column = 0;
};

std::string toString(Location const &loc);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string const &message, std::optional<Location> loc = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<Location> const &location() const noexcept { return loc_; }
    // message without location prefix
    std::string const &detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::optional<Location> loc_;
    std::string detail_;
};

} // namespace dhpp

#endif // DHPP_ERROR_HH
