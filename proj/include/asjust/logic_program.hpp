#pragma once

#include <string>
#include <vector>

#include "asjust/literal.hpp"

namespace asjust {

// head :- body. The head is a classical literal; body literals may carry NAF.
// An empty body makes the clause a fact.
struct Clause {
    Literal head;
    std::vector<Literal> body;  // in written order, duplicates retained

    auto operator<=>(const Clause&) const = default;
    bool is_fact() const { return body.empty(); }
};

// The language induced by a program: all ground atoms occurring in its clauses,
// closed under classical negation (lit) and negation as failure (naf).
struct LiteralUniverse {
    std::vector<std::string> atoms;  // sorted, unique
    LiteralSet lit;                  // {a, -a | atom a}
    LiteralSet naf;                  // {not l | l in lit}

    bool contains_atom(const std::string& name) const;
    // Membership in lit ∪ naf.
    bool contains(const Literal& l) const;
};

// A ground logic program. Clause order and duplicates are preserved as written;
// the universe is derived from the clauses.
struct LogicProgram {
    std::vector<Clause> clauses;
    LiteralUniverse universe;

    // Validates clauses (classical heads, nonempty atom names) and derives the
    // universe. Throws std::invalid_argument on violations.
    static LogicProgram from_clauses(std::vector<Clause> clauses);

    bool operator==(const LogicProgram& other) const { return clauses == other.clauses; }
    // Heads of empty-body clauses.
    LiteralSet facts() const;
};

// An answer set S together with its true-by-failure completion:
// delta = {not l in NAF | l not in S}, s_naf = S ∪ delta.
struct AnswerSetWithNAF {
    LiteralSet s;
    LiteralSet delta;
    LiteralSet s_naf;

    bool operator==(const AnswerSetWithNAF&) const = default;
};

struct AnswerSetEnumeration {
    std::vector<AnswerSetWithNAF> answer_sets;  // consistent ones, sorted by literal sequence
    bool inconsistent = false;                  // no answer set, or only the full literal set
};

// The reduct of p by candidate set s: drop every clause whose body contains
// "not l" with l in s; strip the remaining NAF body literals.
LogicProgram reduct(const LogicProgram& p, const LiteralSet& s);

// Least model of a NAF-free program by fixpoint iteration; collapses to the
// full literal universe if the fixpoint contains a complementary pair.
// Throws std::invalid_argument if any clause still carries NAF.
LiteralSet least_answer_set_positive(const LogicProgram& p);

// s is an answer set iff it reproduces itself through its own reduct.
bool is_answer_set(const LogicProgram& p, const LiteralSet& s);

// Exhaustive search over all subsets of the distinct clause-head literals
// (every member of a consistent answer set must head some clause). Candidates
// containing complementary pairs are never reported; the program is flagged
// inconsistent iff no consistent answer set exists. Throws std::runtime_error
// if the program has more than 24 distinct head literals.
AnswerSetEnumeration enumerate_answer_sets(const LogicProgram& p);

// Completion of a known answer set with its NAF part. Throws
// std::invalid_argument if s is not an answer set of p.
AnswerSetWithNAF naf_completion(const LogicProgram& p, const LiteralSet& s);

// Forward-chaining derivability: the closure of p ∪ {not l. | not l in delta},
// treating NAF body literals as plain preconditions satisfiable only by delta.
// Returns all derivable literals (classical and NAF), sorted.
LiteralSet mp_consequences(const LogicProgram& p, const LiteralSet& delta);

// k is derivable from p with NAF facts delta.
bool derives_mp(const LogicProgram& p, const LiteralSet& delta, const Literal& k);

}  // namespace asjust
