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

#include <dhpp/model_io.hh>
#include <dhpp/parser.hh>

#include <json.hpp>

namespace dhpp {

namespace {

using nlohmann::json;

json toJson(PInterpretation const &h) {
    json formulae = json::array();
    for (auto const &[formula, value] : h.support()) {
        formulae.push_back({{"text", toString(formula)}, {"lo", toFraction(value.lo())}, {"hi", toFraction(value.hi())}});
    }
    return {{"formulae", std::move(formulae)}};
}

Rational rational(json const &value, char const *field) {
    if (value.is_string()) { return parseRational(value.get<std::string>()); }
    if (value.is_number_integer()) { return Rational(value.dump()); }
    if (value.is_number()) { return parseRational(value.dump()); }
    throw Error(ErrorCode::InvalidModel, std::string("field '") + field + "' must be a string or a number");
}

} // namespace

std::string writeModel(PInterpretation const &h, int indent) { return toJson(h).dump(indent); }

std::string writeModels(std::vector<PInterpretation> const &models, int indent) {
    json res = json::array();
    for (auto const &h : models) { res.push_back(toJson(h)); }
    return res.dump(indent);
}

PInterpretation readModel(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    }
    catch (json::parse_error const &e) {
        throw Error(ErrorCode::InvalidModel, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("formulae") || !doc["formulae"].is_array()) {
        throw Error(ErrorCode::InvalidModel, "expected an object with a 'formulae' array");
    }
    PInterpretation res;
    for (auto const &entry : doc["formulae"]) {
        if (!entry.is_object() || !entry.contains("text") || !entry["text"].is_string() || !entry.contains("lo") || !entry.contains("hi")) {
            throw Error(ErrorCode::InvalidModel, "each formula needs 'text', 'lo' and 'hi'");
        }
        try {
            auto formula = parseFormula(entry["text"].get<std::string>());
            if (!formula.isGround()) {
                throw Error(ErrorCode::InvalidModel, "formula '" + entry["text"].get<std::string>() + "' is not ground");
            }
            if (res.lookup(formula) != ProbInterval::zero()) {
                throw Error(ErrorCode::InvalidModel, "formula '" + entry["text"].get<std::string>() + "' given twice");
            }
            res.set(formula, ProbInterval(rational(entry["lo"], "lo"), rational(entry["hi"], "hi")));
        }
        catch (Error const &e) {
            if (e.code() == ErrorCode::InvalidModel) { throw; }
            throw Error(ErrorCode::InvalidModel, entry["text"].get<std::string>() + ": " + e.detail());
        }
    }
    return res;
}

} // namespace dhpp
