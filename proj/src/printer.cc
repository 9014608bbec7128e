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

#include <dhpp/printer.hh>

namespace dhpp {

std::string toString(AnnotationItem const &item) {
    switch (item.kind()) {
        case AnnotationItem::Kind::Constant:
            return toDecimal(item.value());
        case AnnotationItem::Kind::Variable:
            return item.name();
        case AnnotationItem::Kind::Function: {
            std::string out = item.name() + "(";
            for (size_t i = 0; i < item.args().size(); ++i) {
                if (i > 0) { out += ","; }
                out += toString(item.args()[i]);
            }
            return out + ")";
        }
    }
    return {};
}

std::string toString(Annotation const &annotation) {
    if (annotation.lo == annotation.hi) { return toString(annotation.lo); }
    return "[" + toString(annotation.lo) + "," + toString(annotation.hi) + "]";
}

namespace {

std::string suffix(Annotation const &annotation) {
    if (annotation.isConstant(ProbInterval::one())) { return {}; }
    return ":" + toString(annotation);
}

} // namespace

std::string toString(AggregateAtom const &agg) {
    std::string out = toString(agg.function);
    out += "{";
    for (size_t i = 0; i < agg.set.elements.size(); ++i) {
        auto const &e = agg.set.elements[i];
        if (i > 0) { out += "; "; }
        out += toString(e.value) + suffix(e.annotation);
        for (size_t j = 0; j < e.condition.size(); ++j) {
            out += j == 0 ? " | " : ", ";
            out += toString(e.condition[j].formula) + suffix(e.condition[j].annotation);
        }
    }
    out += "} ";
    out += toString(agg.cmp);
    out += " ";
    if (agg.scalarGuard && agg.guardLo == agg.guardHi) {
        out += toString(agg.guardLo);
    }
    else {
        out += "[" + toString(agg.guardLo) + "," + toString(agg.guardHi) + "]";
    }
    return out;
}

std::string toString(BodyLiteral const &lit, bool negated) {
    std::string out = negated ? "not " : "";
    if (lit.isAggregate()) {
        out += toString(lit.aggregate());
        // a scalar guard followed by ':' needs no separator, but keep it readable
        if (!lit.annotation.isConstant(ProbInterval::one())) { out += " : " + toString(lit.annotation); }
        return out;
    }
    return out + toString(lit.formula()) + suffix(lit.annotation);
}

std::string toString(Rule const &rule) {
    std::string out;
    for (size_t i = 0; i < rule.head.size(); ++i) {
        if (i > 0) { out += " | "; }
        out += toString(rule.head[i].atom) + suffix(rule.head[i].annotation);
    }
    bool first = true;
    auto sep = [&] {
        out += first ? " :- " : ", ";
        first = false;
    };
    for (auto const &lit : rule.positive) {
        sep();
        out += toString(lit);
    }
    for (auto const &lit : rule.negative) {
        sep();
        out += toString(lit, true);
    }
    for (auto const &c : rule.comparisons) {
        sep();
        out += toString(c.lhs) + " " + toString(c.cmp) + " " + toString(c.rhs);
    }
    return out + ".";
}

std::string toString(Program const &program) {
    std::string out;
    if (program.tau.defaultStrategy != strategies::DefaultTau) {
        out += "#default_tau(" + program.tau.defaultStrategy + ").\n";
    }
    for (auto const &[pred, name] : program.tau.byPredicate) {
        out += "#tau(" + pred + ", " + name + ").\n";
    }
    for (auto const &r : program.rules) { out += toString(r) + "\n"; }
    return out;
}

} // namespace dhpp
