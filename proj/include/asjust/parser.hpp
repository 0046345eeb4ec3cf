#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asjust/logic_program.hpp"

namespace asjust {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line, int column);
};

struct GroundingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pre-grounding syntax tree. Atoms are predicates with optional constant or
// variable arguments; variables start with an uppercase letter.
struct Term {
    std::string name;
    bool is_variable = false;
    auto operator<=>(const Term&) const = default;
};

struct RawAtom {
    std::string predicate;
    std::vector<Term> args;
    auto operator<=>(const RawAtom&) const = default;
};

struct RawLiteral {
    RawAtom atom;
    bool classically_negated = false;
    bool naf = false;
    auto operator<=>(const RawLiteral&) const = default;
};

struct RawClause {
    RawLiteral head;
    std::vector<RawLiteral> body;
    auto operator<=>(const RawClause&) const = default;
};

struct RawProgram {
    std::vector<RawClause> clauses;

    bool has_variables() const;
    // Constants = lowercase identifiers occurring as predicate arguments; sorted, unique.
    std::vector<std::string> constants() const;
};

// Concrete syntax:
//   clause     := literal [ ":-" literal { "," literal } ] "."
//   literal    := [ "not" ] [ "-" ] atom
//   atom       := ident [ "(" term { "," term } ")" ]
//   term       := ident            (uppercase start = variable)
//   comment    := "%" to end of line
// NAF is rejected in heads, "not not" is rejected, a missing final "." is an
// error. All errors carry 1-based line/column positions.
RawProgram parse_raw_program(std::string_view text);

// Naive grounding: instantiate every clause over all constants of the program
// (per-clause Cartesian product over its variables, last variable fastest),
// then deduplicate the instances keeping first occurrences. A program without
// variables is returned unchanged, duplicates and all. Throws GroundingError
// if variables occur but the program mentions no constant.
LogicProgram ground_program(const RawProgram& p);

// parse_raw_program + ground_program.
LogicProgram parse_program(std::string_view text);

}  // namespace asjust
