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

#ifndef DHPP_PROGRAM_HH
#define DHPP_PROGRAM_HH

#include <dhpp/error.hh>
#include <dhpp/interval.hh>
#include <dhpp/strategy.hh>
#include <dhpp/term.hh>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace dhpp {

// {{{ annotations

// Probability annotation item: a constant in [0,1], a variable ranging over [0,1], or a
// built-in annotation function (pmul, pcomp, pmin, pmax, padd) applied to items.
class AnnotationItem {
public:
    enum class Kind { Constant, Variable, Function };

    AnnotationItem() = default;
    // Throws ConstantOutOfRange.
    static AnnotationItem constant(Rational value);
    static AnnotationItem variable(std::string name);
    // Throws UnknownAnnotationFunction for unknown names or wrong arity.
    static AnnotationItem function(std::string name, std::vector<AnnotationItem> args);

    Kind kind() const noexcept { return kind_; }
    Rational const &value() const noexcept { return value_; }
    std::string const &name() const noexcept { return name_; }
    std::vector<AnnotationItem> const &args() const noexcept { return args_; }

    bool isGround() const;
    void collectVariables(std::set<std::string> &out) const;
    // Variables bound to numbers become constants; functions over constants are folded.
    AnnotationItem substitute(Substitution const &subst) const;
    // Throws UnboundAnnotationVariable or EvaluationError (result outside [0,1]).
    Rational evaluate() const;

    friend bool operator==(AnnotationItem const &a, AnnotationItem const &b);

private:
    Kind kind_ = Kind::Constant;
    Rational value_ = 0;
    std::string name_;
    std::vector<AnnotationItem> args_;
};

bool isAnnotationFunction(std::string const &name);

struct Annotation {
    AnnotationItem lo;
    AnnotationItem hi;

    static Annotation constant(ProbInterval const &value);
    static Annotation one() { return constant(ProbInterval::one()); }

    bool isGround() const { return lo.isGround() && hi.isGround(); }
    bool isConstant(ProbInterval const &value) const;
    void collectVariables(std::set<std::string> &out) const;
    Annotation substitute(Substitution const &subst) const { return {lo.substitute(subst), hi.substitute(subst)}; }
    // Throws UnboundAnnotationVariable, EvaluationError or InvalidInterval.
    ProbInterval evaluate() const;

    friend bool operator==(Annotation const &, Annotation const &) = default;
};

// }}}
// {{{ formulae

enum class Connective { None, And, Or };

// a, or a1 and[rho] ... and[rho] an, or a1 or[rho] ... or[rho] an over distinct atoms.
struct HybridBasicFormula {
    std::vector<Atom> atoms;
    Connective connective = Connective::None;
    std::string strategy;

    static HybridBasicFormula atom(Atom a) { return {{std::move(a)}, Connective::None, {}}; }

    bool isAtom() const { return connective == Connective::None; }
    bool isGround() const;
    void collectVariables(std::set<std::string> &out) const;
    void collectBindableVariables(std::set<std::string> &out) const;
    HybridBasicFormula substitute(Substitution const &subst) const;
    HybridBasicFormula evaluate() const;

    friend bool operator==(HybridBasicFormula const &, HybridBasicFormula const &) = default;
    friend std::strong_ordering operator<=>(HybridBasicFormula const &a, HybridBasicFormula const &b);
};

std::string toString(HybridBasicFormula const &f);

struct AnnotatedFormula {
    HybridBasicFormula formula;
    Annotation annotation;

    friend bool operator==(AnnotatedFormula const &, AnnotatedFormula const &) = default;
};

// }}}
// {{{ probability sets and aggregates

// One element F : [P1,P2] | C of a probability set. In ground form all parts are ground.
struct SetElement {
    Term value;
    Annotation annotation;
    std::vector<AnnotatedFormula> condition;

    bool isGround() const;
    void collectVariables(std::set<std::string> &out) const;

    friend bool operator==(SetElement const &, SetElement const &) = default;
};

struct ProbabilitySet {
    std::vector<SetElement> elements;

    bool isGround() const;

    friend bool operator==(ProbabilitySet const &, ProbabilitySet const &) = default;
};

enum class AggregateFunction { ValE, SumE, TimesE, MinE, MaxE, CountE, SumP, TimesP, MinP, MaxP, CountP };

char const *toString(AggregateFunction fn);
std::optional<AggregateFunction> aggregateFunction(std::string const &name);
// val_E, sum_E, times_E, min_E, max_E, count_E
bool isExpectedValue(AggregateFunction fn);

// f(S) cmp [guardLo, guardHi]
struct AggregateAtom {
    AggregateFunction function = AggregateFunction::SumP;
    ProbabilitySet set;
    Comparator cmp = Comparator::Eq;
    Term guardLo;
    Term guardHi;
    bool scalarGuard = true;

    friend bool operator==(AggregateAtom const &, AggregateAtom const &) = default;
};

// }}}
// {{{ rules and programs

struct BodyLiteral {
    std::variant<HybridBasicFormula, AggregateAtom> content;
    Annotation annotation;

    bool isAggregate() const { return std::holds_alternative<AggregateAtom>(content); }
    HybridBasicFormula const &formula() const { return std::get<HybridBasicFormula>(content); }
    AggregateAtom const &aggregate() const { return std::get<AggregateAtom>(content); }

    friend bool operator==(BodyLiteral const &, BodyLiteral const &) = default;
};

// Built-in comparison over arithmetic terms; evaluated during grounding.
struct Comparison {
    Term lhs;
    Comparator cmp = Comparator::Eq;
    Term rhs;

    friend bool operator==(Comparison const &, Comparison const &) = default;
};

struct HeadDisjunct {
    Atom atom;
    Annotation annotation;

    friend bool operator==(HeadDisjunct const &, HeadDisjunct const &) = default;
};

struct Rule {
    std::vector<HeadDisjunct> head;
    std::vector<BodyLiteral> positive;
    std::vector<BodyLiteral> negative;
    std::vector<Comparison> comparisons;

    // Re-annotates expected-value aggregate literals with [1,1].
    void normalize();
    bool isGround() const;

    friend bool operator==(Rule const &, Rule const &) = default;
};

// Builds a normalized rule. Throws UnsupportedConstruct for an empty head.
Rule makeRule(std::vector<HeadDisjunct> head, std::vector<BodyLiteral> positive = {},
              std::vector<BodyLiteral> negative = {}, std::vector<Comparison> comparisons = {});

// Reserved atom used to desugar headless constraints ":- B." into "#gamma :- not #gamma, B."
Atom constraintAtom();

// tau: predicate symbol -> disjunctive strategy, with a global default.
struct TauMap {
    std::map<std::string, std::string> byPredicate;
    std::string defaultStrategy = strategies::DefaultTau;

    std::string const &strategyFor(std::string const &predicate) const;

    friend bool operator==(TauMap const &, TauMap const &) = default;
};

struct Program {
    std::vector<Rule> rules;
    TauMap tau;
    std::shared_ptr<StrategyRegistry const> registry = std::make_shared<StrategyRegistry const>(StrategyRegistry::withBuiltins());

    // Throws UnknownStrategy / StrategyKindMismatch if a strategy is not registered with the right kind.
    void validateStrategies() const;
};

// }}}

} // namespace dhpp

#endif // DHPP_PROGRAM_HH
