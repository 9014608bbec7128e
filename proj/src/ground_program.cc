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

#include <dhpp/ground_program.hh>
#include <dhpp/printer.hh>

#include <algorithm>

namespace dhpp {

namespace {

Rational numberOf(Term const &term) {
    auto value = term.evaluate();
    if (!value.isNumber()) {
        throw Error(ErrorCode::EvaluationError, "guard " + toString(term) + " is not a number");
    }
    return value.value();
}

AggregateAtom toAst(GroundProgram const &prg, GroundAggregate const &agg) {
    AggregateAtom res;
    res.function = agg.function;
    res.cmp = agg.cmp;
    res.scalarGuard = agg.scalarGuard;
    res.guardLo = Term::number(agg.guard.lo());
    res.guardHi = Term::number(agg.guard.hi());
    for (auto const &pair : agg.set) {
        SetElement elem{pair.value, Annotation::constant(pair.probability), {}};
        for (auto const &cond : pair.condition) {
            elem.condition.push_back({prg.formula(cond.formula).formula, Annotation::constant(cond.annotation)});
        }
        res.set.elements.push_back(std::move(elem));
    }
    return res;
}

} // namespace

bool holds(Comparison const &comparison) {
    auto lhs = comparison.lhs.evaluate();
    auto rhs = comparison.rhs.evaluate();
    if (!lhs.isGround() || !rhs.isGround()) {
        throw Error(ErrorCode::EvaluationError, "comparison over non-ground terms");
    }
    if (lhs.isNumber() && rhs.isNumber()) { return compareScalar(lhs.value(), comparison.cmp, rhs.value()); }
    auto order = lhs <=> rhs;
    int c = order < 0 ? -1 : order > 0 ? 1 : 0;
    return compareScalar(c, comparison.cmp, 0);
}

GroundProgram::GroundProgram()
: registry_(std::make_shared<StrategyRegistry const>(StrategyRegistry::withBuiltins())) { }

GroundProgram::GroundProgram(std::shared_ptr<StrategyRegistry const> registry, TauMap tau)
: registry_(std::move(registry))
, tau_(std::move(tau)) {
    if (!registry_) {
        registry_ = std::make_shared<StrategyRegistry const>(StrategyRegistry::withBuiltins());
    }
}

std::optional<FormulaId> GroundProgram::find(HybridBasicFormula const &formula) const {
    auto it = formulaIndex_.find(formula);
    if (it == formulaIndex_.end()) { return std::nullopt; }
    return it->second;
}

FormulaId GroundProgram::intern(HybridBasicFormula const &formula) {
    if (auto id = find(formula)) { return *id; }
    if (!formula.isGround()) {
        throw Error(ErrorCode::EvaluationError, "formula " + toString(formula) + " is not ground");
    }
    FormulaInfo info;
    info.formula = formula;
    if (formula.isAtom()) {
        info.strategy = &registry_->at(tau_.strategyFor(formula.atoms.front().predicate), StrategyKind::Disjunctive);
    }
    else {
        auto kind = formula.connective == Connective::And ? StrategyKind::Conjunctive : StrategyKind::Disjunctive;
        info.strategy = &registry_->at(formula.strategy, kind);
        auto atoms = formula.atoms;
        std::sort(atoms.begin(), atoms.end());
        if (std::adjacent_find(atoms.begin(), atoms.end()) != atoms.end()) {
            throw Error(ErrorCode::UnsupportedConstruct, "formula " + toString(formula) + " repeats an atom");
        }
        for (auto const &atom : formula.atoms) {
            info.components.push_back(intern(HybridBasicFormula::atom(atom)));
        }
    }
    auto id = static_cast<FormulaId>(formulas_.size());
    formulas_.push_back(std::move(info));
    formulaIndex_.emplace(formula, id);
    heads_.emplace_back();
    return id;
}

AggregateId GroundProgram::intern(GroundAggregate aggregate) {
    std::sort(aggregate.set.begin(), aggregate.set.end());
    aggregate.set.erase(std::unique(aggregate.set.begin(), aggregate.set.end()), aggregate.set.end());
    for (auto &pair : aggregate.set) {
        std::sort(pair.condition.begin(), pair.condition.end());
        pair.condition.erase(std::unique(pair.condition.begin(), pair.condition.end()), pair.condition.end());
    }
    std::sort(aggregate.set.begin(), aggregate.set.end());
    aggregate.set.erase(std::unique(aggregate.set.begin(), aggregate.set.end()), aggregate.set.end());
    auto key = toString(toAst(*this, aggregate));
    auto it = aggregateIndex_.find(key);
    if (it != aggregateIndex_.end()) { return it->second; }
    auto id = static_cast<AggregateId>(aggregates_.size());
    aggregates_.push_back(std::move(aggregate));
    aggregateIndex_.emplace(std::move(key), id);
    return id;
}

void GroundProgram::addRule(Rule const &rule) {
    GroundRule res;
    for (auto const &disjunct : rule.head) {
        auto atom = disjunct.atom.evaluate();
        res.head.push_back({intern(HybridBasicFormula::atom(atom)), disjunct.annotation.evaluate()});
    }
    auto literal = [&](BodyLiteral const &lit) {
        GroundLiteral out;
        out.annotation = lit.annotation.evaluate();
        if (!lit.isAggregate()) {
            out.id = intern(lit.formula().evaluate());
            return out;
        }
        auto const &agg = lit.aggregate();
        GroundAggregate ground;
        ground.function = agg.function;
        ground.cmp = agg.cmp;
        ground.scalarGuard = agg.scalarGuard;
        ground.guard = ValueInterval(numberOf(agg.guardLo), numberOf(agg.guardHi));
        for (auto const &elem : agg.set.elements) {
            GroundPair pair{elem.value.evaluate(), elem.annotation.evaluate(), {}};
            if (!pair.value.isGround()) {
                throw Error(ErrorCode::EvaluationError, "set element " + toString(elem.value) + " is not ground");
            }
            for (auto const &cond : elem.condition) {
                pair.condition.push_back({intern(cond.formula.evaluate()), cond.annotation.evaluate()});
            }
            ground.set.push_back(std::move(pair));
        }
        out.kind = GroundLiteral::Kind::Aggregate;
        out.id = intern(std::move(ground));
        return out;
    };
    for (auto const &lit : rule.positive) { res.positive.push_back(literal(lit)); }
    for (auto const &lit : rule.negative) { res.negative.push_back(literal(lit)); }
    for (auto const &cmp : rule.comparisons) {
        if (!holds(cmp)) { return; }
    }
    addRule(std::move(res));
}

void GroundProgram::addRule(GroundRule rule) {
    auto index = rules_.size();
    for (size_t i = 0; i < rule.head.size(); ++i) {
        heads_[rule.head[i].atom].emplace_back(index, i);
    }
    rules_.push_back(std::move(rule));
}

GroundProgram GroundProgram::withRules(std::vector<GroundRule> rules) const {
    GroundProgram res = *this;
    res.rules_.clear();
    for (auto &occ : res.heads_) { occ.clear(); }
    for (auto &rule : rules) { res.addRule(std::move(rule)); }
    return res;
}

std::vector<std::pair<size_t, size_t>> const &GroundProgram::headOccurrences(FormulaId atom) const {
    return heads_[atom];
}

Valuation GroundProgram::valuation(PInterpretation const &h) const {
    Valuation res = bottom();
    for (auto const &[formula, value] : h.support()) {
        if (auto id = find(formula)) { res[*id] = value; }
    }
    return res;
}

PInterpretation GroundProgram::interpretation(Valuation const &v) const {
    PInterpretation res;
    for (size_t i = 0; i < v.size() && i < formulas_.size(); ++i) {
        res.set(formulas_[i].formula, v[i]);
    }
    return res;
}

Program GroundProgram::toProgram() const {
    Program res;
    res.tau = tau_;
    res.registry = registry_;
    auto literal = [&](GroundLiteral const &lit) {
        if (lit.isAggregate()) {
            return BodyLiteral{toAst(*this, aggregate(lit.id)), Annotation::constant(lit.annotation)};
        }
        return BodyLiteral{formula(lit.id).formula, Annotation::constant(lit.annotation)};
    };
    for (auto const &rule : rules_) {
        Rule out;
        for (auto const &head : rule.head) {
            out.head.push_back({formula(head.atom).formula.atoms.front(), Annotation::constant(head.annotation)});
        }
        for (auto const &lit : rule.positive) { out.positive.push_back(literal(lit)); }
        for (auto const &lit : rule.negative) { out.negative.push_back(literal(lit)); }
        res.rules.push_back(std::move(out));
    }
    return res;
}

std::string toString(GroundProgram const &program) { return toString(program.toProgram()); }

} // namespace dhpp
