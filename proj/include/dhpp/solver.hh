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

#ifndef DHPP_SOLVER_HH
#define DHPP_SOLVER_HH

#include <dhpp/semantics.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace dhpp {

struct SolverOptions {
    // stop after this many answer sets; 0 enumerates all
    size_t limit = 0;
    // caps the number of truth guesses over NAF literals and aggregate atoms
    size_t maxGuesses = size_t(1) << 20;
    // caps the number of values per formula in the value lattice
    size_t maxLatticeSize = 4096;
    // caps the nodes visited by one lattice minimality search
    size_t maxSearchNodes = 20'000'000;
    // permutes the exploration order; results are order-normalized
    std::optional<std::uint64_t> seed;
};

// Finite set of candidate values per formula used by the minimality search.
class ValueLattice {
public:
    // Contains [0,0], the sub-multiset tau-folds of each atom's head annotations, the
    // annotations formulae carry in bodies and set conditions, closed under join.
    // Throws SearchSpaceOverflow beyond maxSize values for a formula.
    static ValueLattice build(GroundProgram const &prg, size_t maxSize = 4096);

    std::vector<ProbInterval> const &values(FormulaId id) const { return values_[id]; }
    size_t size() const noexcept { return values_.size(); }

private:
    std::vector<std::vector<ProbInterval>> values_;
};

struct MinimalityResult {
    bool minimal = true;
    // lower interpretations (or fixpoint branches) examined
    size_t examined = 0;
    // a p-model strictly below h, if one was found
    std::optional<Valuation> witness;
};

// Searches for a p-model of prg strictly below h. Throws SearchSpaceOverflow.
MinimalityResult checkMinimality(GroundProgram const &prg, Valuation const &h, SolverOptions const &options = {});
bool isMinimalModel(GroundProgram const &prg, Valuation const &h, SolverOptions const &options = {});
bool isMinimalModel(GroundProgram const &prg, PInterpretation const &h, SolverOptions const &options = {});

// p-model of the program and minimal p-model of its reduct
bool isAnswerSet(GroundProgram const &prg, Valuation const &h, SolverOptions const &options = {});

struct AnswerSetCertificate {
    size_t reductSize = 0;
    size_t witnessesExamined = 0;
};

struct AnswerSetResult {
    // sorted, restricted to formulae different from [0,0]
    std::vector<PInterpretation> interpretations;
    std::vector<AnswerSetCertificate> certificates;
    // distinct candidates verified
    size_t candidates = 0;
    bool truncated = false;
};

AnswerSetResult enumerateAnswerSets(GroundProgram const &prg, SolverOptions const &options = {});

// no two interpretations are comparable under the pointwise truth order
bool checkIncomparability(std::vector<PInterpretation> const &interpretations);
inline bool checkIncomparability(AnswerSetResult const &res) { return checkIncomparability(res.interpretations); }

} // namespace dhpp

#endif // DHPP_SOLVER_HH
