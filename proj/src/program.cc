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

#include <dhpp/program.hh>

#include <algorithm>
#include <functional>

namespace dhpp {

// {{{ annotation functions

namespace {

struct AnnotationFunction {
    size_t minArity;
    size_t maxArity;
    std::function<Rational(std::vector<Rational> const &)> apply;
};

std::map<std::string, AnnotationFunction> const &annotationFunctions() {
    static std::map<std::string, AnnotationFunction> const table = {
        {"pmul", {1, SIZE_MAX, [](std::vector<Rational> const &xs) {
            Rational r = 1;
            for (auto const &x : xs) { r *= x; }
            return r;
        }}},
        {"pcomp", {1, 1, [](std::vector<Rational> const &xs) { return Rational(1 - xs[0]); }}},
        {"pmin", {1, SIZE_MAX, [](std::vector<Rational> const &xs) { return *std::min_element(xs.begin(), xs.end()); }}},
        {"pmax", {1, SIZE_MAX, [](std::vector<Rational> const &xs) { return *std::max_element(xs.begin(), xs.end()); }}},
        {"padd", {1, SIZE_MAX, [](std::vector<Rational> const &xs) {
            Rational r = 0;
            for (auto const &x : xs) { r += x; }
            return r > 1 ? Rational(1) : r;
        }}},
    };
    return table;
}

} // namespace

bool isAnnotationFunction(std::string const &name) {
    return annotationFunctions().count(name) != 0;
}

// }}}
// {{{ AnnotationItem

AnnotationItem AnnotationItem::constant(Rational value) {
    if (value < 0 || value > 1) {
        throw Error(ErrorCode::ConstantOutOfRange, toDecimal(value) + " is not in [0,1]");
    }
    AnnotationItem item;
    item.kind_ = Kind::Constant;
    item.value_ = std::move(value);
    return item;
}

AnnotationItem AnnotationItem::variable(std::string name) {
    AnnotationItem item;
    item.kind_ = Kind::Variable;
    item.name_ = std::move(name);
    return item;
}

AnnotationItem AnnotationItem::function(std::string name, std::vector<AnnotationItem> args) {
    auto const &table = annotationFunctions();
    auto it = table.find(name);
    if (it == table.end()) { throw Error(ErrorCode::UnknownAnnotationFunction, "'" + name + "'"); }
    if (args.size() < it->second.minArity || args.size() > it->second.maxArity) {
        throw Error(ErrorCode::UnknownAnnotationFunction, "'" + name + "' does not take " + std::to_string(args.size()) + " arguments");
    }
    AnnotationItem item;
    item.kind_ = Kind::Function;
    item.name_ = std::move(name);
    item.args_ = std::move(args);
    return item;
}

bool AnnotationItem::isGround() const {
    if (kind_ == Kind::Variable) { return false; }
    return std::all_of(args_.begin(), args_.end(), [](AnnotationItem const &a) { return a.isGround(); });
}

void AnnotationItem::collectVariables(std::set<std::string> &out) const {
    if (kind_ == Kind::Variable) { out.insert(name_); }
    for (auto const &arg : args_) { arg.collectVariables(out); }
}

AnnotationItem AnnotationItem::substitute(Substitution const &subst) const {
    switch (kind_) {
        case Kind::Constant:
            return *this;
        case Kind::Variable: {
            auto it = subst.find(name_);
            if (it == subst.end()) { return *this; }
            Term value = it->second.evaluate();
            if (!value.isNumber()) {
                throw Error(ErrorCode::EvaluationError, "annotation variable " + name_ + " bound to non-numeric term " + toString(value));
            }
            return constant(value.value());
        }
        case Kind::Function: {
            AnnotationItem item = *this;
            for (auto &arg : item.args_) { arg = arg.substitute(subst); }
            if (item.isGround()) { return constant(item.evaluate()); }
            return item;
        }
    }
    return *this;
}

Rational AnnotationItem::evaluate() const {
    switch (kind_) {
        case Kind::Constant:
            return value_;
        case Kind::Variable:
            throw Error(ErrorCode::UnboundAnnotationVariable, "'" + name_ + "'");
        case Kind::Function: {
            std::vector<Rational> xs;
            xs.reserve(args_.size());
            for (auto const &arg : args_) { xs.push_back(arg.evaluate()); }
            Rational r = annotationFunctions().at(name_).apply(xs);
            if (r < 0 || r > 1) {
                throw Error(ErrorCode::EvaluationError, "annotation function " + name_ + " returned " + toDecimal(r) + " outside [0,1]");
            }
            return r;
        }
    }
    return value_;
}

bool operator==(AnnotationItem const &a, AnnotationItem const &b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_ && a.name_ == b.name_ && a.args_ == b.args_;
}

// }}}
// {{{ Annotation

Annotation Annotation::constant(ProbInterval const &value) {
    return {AnnotationItem::constant(value.lo()), AnnotationItem::constant(value.hi())};
}

bool Annotation::isConstant(ProbInterval const &value) const {
    return lo.kind() == AnnotationItem::Kind::Constant && hi.kind() == AnnotationItem::Kind::Constant &&
           lo.value() == value.lo() && hi.value() == value.hi();
}

void Annotation::collectVariables(std::set<std::string> &out) const {
    lo.collectVariables(out);
    hi.collectVariables(out);
}

ProbInterval Annotation::evaluate() const {
    return {lo.evaluate(), hi.evaluate()};
}

// }}}
// {{{ HybridBasicFormula

bool HybridBasicFormula::isGround() const {
    return std::all_of(atoms.begin(), atoms.end(), [](Atom const &a) { return a.isGround(); });
}

void HybridBasicFormula::collectVariables(std::set<std::string> &out) const {
    for (auto const &a : atoms) { a.collectVariables(out); }
}

void HybridBasicFormula::collectBindableVariables(std::set<std::string> &out) const {
    for (auto const &a : atoms) { a.collectBindableVariables(out); }
}

HybridBasicFormula HybridBasicFormula::substitute(Substitution const &subst) const {
    HybridBasicFormula f{{}, connective, strategy};
    for (auto const &a : atoms) { f.atoms.push_back(a.substitute(subst)); }
    return f;
}

HybridBasicFormula HybridBasicFormula::evaluate() const {
    HybridBasicFormula f{{}, connective, strategy};
    for (auto const &a : atoms) { f.atoms.push_back(a.evaluate()); }
    return f;
}

std::strong_ordering operator<=>(HybridBasicFormula const &a, HybridBasicFormula const &b) {
    if (auto c = a.connective <=> b.connective; c != 0) { return c; }
    if (auto c = a.strategy <=> b.strategy; c != 0) { return c; }
    return std::lexicographical_compare_three_way(a.atoms.begin(), a.atoms.end(), b.atoms.begin(), b.atoms.end());
}

std::string toString(HybridBasicFormula const &f) {
    std::string out;
    for (size_t i = 0; i < f.atoms.size(); ++i) {
        if (i > 0) { out += (f.connective == Connective::And ? " and[" : " or[") + f.strategy + "] "; }
        out += toString(f.atoms[i]);
    }
    return out;
}

// }}}
// {{{ sets and aggregates

bool SetElement::isGround() const {
    return value.isGround() && annotation.isGround() &&
           std::all_of(condition.begin(), condition.end(), [](AnnotatedFormula const &c) {
               return c.formula.isGround() && c.annotation.isGround();
           });
}

void SetElement::collectVariables(std::set<std::string> &out) const {
    value.collectVariables(out);
    annotation.collectVariables(out);
    for (auto const &c : condition) {
        c.formula.collectVariables(out);
        c.annotation.collectVariables(out);
    }
}

bool ProbabilitySet::isGround() const {
    return std::all_of(elements.begin(), elements.end(), [](SetElement const &e) { return e.isGround(); });
}

namespace {

constexpr std::pair<AggregateFunction, char const *> aggregateNames[] = {
    {AggregateFunction::ValE, "valE"},     {AggregateFunction::SumE, "sumE"},   {AggregateFunction::TimesE, "timesE"},
    {AggregateFunction::MinE, "minE"},     {AggregateFunction::MaxE, "maxE"},   {AggregateFunction::CountE, "countE"},
    {AggregateFunction::SumP, "sumP"},     {AggregateFunction::TimesP, "timesP"}, {AggregateFunction::MinP, "minP"},
    {AggregateFunction::MaxP, "maxP"},     {AggregateFunction::CountP, "countP"},
};

} // namespace

char const *toString(AggregateFunction fn) {
    for (auto const &[f, name] : aggregateNames) {
        if (f == fn) { return name; }
    }
    return "?";
}

std::optional<AggregateFunction> aggregateFunction(std::string const &name) {
    for (auto const &[f, n] : aggregateNames) {
        if (name == n) { return f; }
    }
    return std::nullopt;
}

bool isExpectedValue(AggregateFunction fn) {
    switch (fn) {
        case AggregateFunction::ValE:
        case AggregateFunction::SumE:
        case AggregateFunction::TimesE:
        case AggregateFunction::MinE:
        case AggregateFunction::MaxE:
        case AggregateFunction::CountE:
            return true;
        default:
            return false;
    }
}

// }}}
// {{{ rules and programs

void Rule::normalize() {
    auto fix = [](std::vector<BodyLiteral> &lits) {
        for (auto &lit : lits) {
            if (lit.isAggregate() && isExpectedValue(lit.aggregate().function)) { lit.annotation = Annotation::one(); }
        }
    };
    fix(positive);
    fix(negative);
}

bool Rule::isGround() const {
    auto groundLit = [](BodyLiteral const &lit) {
        if (!lit.annotation.isGround()) { return false; }
        if (lit.isAggregate()) {
            auto const &agg = lit.aggregate();
            return agg.set.isGround() && agg.guardLo.isGround() && agg.guardHi.isGround();
        }
        return lit.formula().isGround();
    };
    return std::all_of(head.begin(), head.end(), [](HeadDisjunct const &h) { return h.atom.isGround() && h.annotation.isGround(); }) &&
           std::all_of(positive.begin(), positive.end(), groundLit) &&
           std::all_of(negative.begin(), negative.end(), groundLit) &&
           std::all_of(comparisons.begin(), comparisons.end(), [](Comparison const &c) { return c.lhs.isGround() && c.rhs.isGround(); });
}

Rule makeRule(std::vector<HeadDisjunct> head, std::vector<BodyLiteral> positive, std::vector<BodyLiteral> negative,
              std::vector<Comparison> comparisons) {
    if (head.empty()) { throw Error(ErrorCode::UnsupportedConstruct, "rule heads must be nonempty"); }
    Rule r{std::move(head), std::move(positive), std::move(negative), std::move(comparisons)};
    r.normalize();
    return r;
}

Atom constraintAtom() { return Atom{"#gamma", {}}; }

std::string const &TauMap::strategyFor(std::string const &predicate) const {
    auto it = byPredicate.find(predicate);
    return it == byPredicate.end() ? defaultStrategy : it->second;
}

void Program::validateStrategies() const {
    registry->at(tau.defaultStrategy, StrategyKind::Disjunctive);
    for (auto const &[pred, name] : tau.byPredicate) { registry->at(name, StrategyKind::Disjunctive); }
    auto checkFormula = [&](HybridBasicFormula const &f) {
        if (!f.isAtom()) {
            registry->at(f.strategy, f.connective == Connective::And ? StrategyKind::Conjunctive : StrategyKind::Disjunctive);
        }
    };
    auto checkLits = [&](std::vector<BodyLiteral> const &lits) {
        for (auto const &lit : lits) {
            if (lit.isAggregate()) {
                for (auto const &e : lit.aggregate().set.elements) {
                    for (auto const &c : e.condition) { checkFormula(c.formula); }
                }
            }
            else {
                checkFormula(lit.formula());
            }
        }
    };
    for (auto const &r : rules) {
        checkLits(r.positive);
        checkLits(r.negative);
    }
}

// }}}

} // namespace dhpp
