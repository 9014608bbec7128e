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

#ifndef DHPP_GROUND_PROGRAM_HH
#define DHPP_GROUND_PROGRAM_HH

#include <dhpp/interpretation.hh>
#include <dhpp/program.hh>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace dhpp {

using FormulaId = std::uint32_t;
using AggregateId = std::uint32_t;

// Dense p-interpretation indexed by FormulaId.
using Valuation = std::vector<ProbInterval>;

struct GroundCondition {
    FormulaId formula;
    ProbInterval annotation;

    friend bool operator==(GroundCondition const &, GroundCondition const &) = default;
    friend auto operator<=>(GroundCondition const &, GroundCondition const &) = default;
};

// <F^g : [P1,P2] | C^g>
struct GroundPair {
    Term value;
    ProbInterval probability;
    std::vector<GroundCondition> condition;

    friend bool operator==(GroundPair const &, GroundPair const &) = default;
    friend auto operator<=>(GroundPair const &, GroundPair const &) = default;
};

struct GroundAggregate {
    AggregateFunction function = AggregateFunction::SumP;
    std::vector<GroundPair> set;
    Comparator cmp = Comparator::Eq;
    ValueInterval guard;
    bool scalarGuard = true;
};

struct GroundLiteral {
    enum class Kind { Formula, Aggregate };
    Kind kind = Kind::Formula;
    // FormulaId or AggregateId depending on kind
    std::uint32_t id = 0;
    ProbInterval annotation;

    bool isAggregate() const { return kind == Kind::Aggregate; }
    friend bool operator==(GroundLiteral const &, GroundLiteral const &) = default;
    friend auto operator<=>(GroundLiteral const &, GroundLiteral const &) = default;
};

struct GroundHead {
    FormulaId atom;
    ProbInterval annotation;

    friend bool operator==(GroundHead const &, GroundHead const &) = default;
    friend auto operator<=>(GroundHead const &, GroundHead const &) = default;
};

struct GroundRule {
    std::vector<GroundHead> head;
    std::vector<GroundLiteral> positive;
    std::vector<GroundLiteral> negative;

    friend bool operator==(GroundRule const &, GroundRule const &) = default;
    friend auto operator<=>(GroundRule const &, GroundRule const &) = default;
};

struct FormulaInfo {
    HybridBasicFormula formula;
    // atom ids of a compound formula; empty for atoms
    std::vector<FormulaId> components;
    // composition strategy for compounds, tau(a) for atoms
    PStrategy const *strategy = nullptr;

    bool isAtom() const { return components.empty(); }
};

// Fully ground program over an interned table of the relevant hybrid basic formulae.
class GroundProgram {
public:
    GroundProgram();
    GroundProgram(std::shared_ptr<StrategyRegistry const> registry, TauMap tau);

    // Interns a ground formula (and the atoms of a compound). Throws UnknownStrategy.
    FormulaId intern(HybridBasicFormula const &formula);
    std::optional<FormulaId> find(HybridBasicFormula const &formula) const;
    AggregateId intern(GroundAggregate aggregate);

    // Compiles a ground rule AST: annotations evaluated, formulae interned, sets deduplicated.
    void addRule(Rule const &groundRule);
    void addRule(GroundRule rule);

    // Same formula and aggregate tables, different rule set.
    GroundProgram withRules(std::vector<GroundRule> rules) const;

    std::vector<FormulaInfo> const &formulas() const noexcept { return formulas_; }
    FormulaInfo const &formula(FormulaId id) const { return formulas_[id]; }
    std::vector<GroundAggregate> const &aggregates() const noexcept { return aggregates_; }
    GroundAggregate const &aggregate(AggregateId id) const { return aggregates_[id]; }
    std::vector<GroundRule> const &rules() const noexcept { return rules_; }
    size_t size() const noexcept { return rules_.size(); }

    // (rule index, head position) of every head occurrence of an atom
    std::vector<std::pair<size_t, size_t>> const &headOccurrences(FormulaId atom) const;

    TauMap const &tau() const noexcept { return tau_; }
    std::shared_ptr<StrategyRegistry const> const &registry() const noexcept { return registry_; }

    // all-[0,0] valuation
    Valuation bottom() const { return Valuation(formulas_.size()); }
    // formulae outside the table are ignored
    Valuation valuation(PInterpretation const &h) const;
    PInterpretation interpretation(Valuation const &v) const;

    // Back to a (ground) AST, e.g. for printing.
    Program toProgram() const;

private:
    std::shared_ptr<StrategyRegistry const> registry_;
    TauMap tau_;
    std::vector<FormulaInfo> formulas_;
    std::map<HybridBasicFormula, FormulaId> formulaIndex_;
    std::vector<GroundAggregate> aggregates_;
    std::map<std::string, AggregateId> aggregateIndex_;
    std::vector<GroundRule> rules_;
    std::vector<std::vector<std::pair<size_t, size_t>>> heads_;
};

std::string toString(GroundProgram const &program);

// Evaluates a ground built-in comparison; numbers compare numerically, other terms by the
// total term order. Throws EvaluationError.
bool holds(Comparison const &comparison);

} // namespace dhpp

#endif // DHPP_GROUND_PROGRAM_HH
