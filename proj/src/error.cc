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

#include <dhpp/error.hh>

namespace dhpp {

char const *toString(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError:               return "syntax error";
        case ErrorCode::ConstantOutOfRange:        return "constant out of range";
        case ErrorCode::UnknownAggregateFunction:  return "unknown aggregate function";
        case ErrorCode::UnknownAnnotationFunction: return "unknown annotation function";
        case ErrorCode::UnknownStrategy:           return "unknown strategy";
        case ErrorCode::StrategyKindMismatch:      return "strategy kind mismatch";
        case ErrorCode::UnsafeVariable:            return "unsafe variable";
        case ErrorCode::InvalidInterval:           return "invalid interval";
        case ErrorCode::DuplicateName:             return "duplicate name";
        case ErrorCode::EmptyMultiset:             return "empty multiset";
        case ErrorCode::UniverseOverflow:          return "universe overflow";
        case ErrorCode::UnboundAnnotationVariable: return "unbound annotation variable";
        case ErrorCode::EvaluationError:           return "evaluation error";
        case ErrorCode::SearchSpaceOverflow:       return "search space overflow";
        case ErrorCode::UnsupportedConstruct:      return "unsupported construct";
        case ErrorCode::TooLarge:                  return "too large";
        case ErrorCode::InvalidModel:              return "invalid model";
        case ErrorCode::IoError:                   return "i/o error";
    }
    return "error";
}

std::string toString(Location const &loc) {
    std::string out = loc.file.empty() ? "<input>" : loc.file;
    out += ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column);
    return out;
}

namespace {

std::string format(ErrorCode code, std::string const &message, std::optional<Location> const &loc) {
    std::string out;
    if (loc) { out += toString(*loc) + ": "; }
    out += toString(code);
    if (!message.empty()) { out += ": " + message; }
    return out;
}

} // namespace

Error::Error(ErrorCode code, std::string const &message, std::optional<Location> loc)
: std::runtime_error(format(code, message, loc))
, code_(code)
, loc_(std::move(loc))
, detail_(message) { }

} // namespace dhpp
