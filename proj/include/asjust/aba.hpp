#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "asjust/logic_program.hpp"

namespace asjust {

// Raised when a queried literal is not in the framework's language.
struct LiteralOutsideLanguage : std::invalid_argument {
    Literal literal;
    explicit LiteralOutsideLanguage(const Literal& l);
};

// The assumption-based argumentation frame of a program: the clauses act as
// inference rules, the NAF literals are the assumptions, and the contrary of
// "not l" is l. The framework is flat — no assumption heads a rule.
struct AbaFramework {
    LogicProgram program;    // rules
    LiteralSet assumptions;  // = program.universe.naf

    bool is_assumption(const Literal& l) const { return l.naf && in_language(l); }
    // Contrary of an assumption; throws std::invalid_argument on non-assumptions.
    Literal contrary(const Literal& assumption) const;
    bool in_language(const Literal& l) const { return program.universe.contains(l); }
};

AbaFramework translate(const LogicProgram& p);

// Witness derivation tree: leaves hold assumptions or facts (rule == -1),
// inner nodes hold the conclusion of the rule (clause index) applied.
struct Derivation {
    Literal lit;
    int rule = -1;
    std::vector<Derivation> children;

    bool operator==(const Derivation&) const = default;
    int node_count() const;
};

// An argument identified by its signature (conclusion, ap, fp): a derivation of
// `conclusion` from assumption-premises `ap` and fact-premises `fp`. One
// argument per realizable signature; `witness` is a minimal derivation.
struct Argument {
    int index = -1;  // position in the canonical order; id() == "A<index+1>"
    Literal conclusion;
    LiteralSet ap;
    LiteralSet fp;
    Derivation witness;

    std::string id() const { return "A" + std::to_string(index + 1); }
    bool is_assumption_argument() const {
        return conclusion.naf && ap.size() == 1 && ap[0] == conclusion && fp.empty();
    }
    bool is_fact_argument() const {
        return ap.empty() && fp.size() == 1 && fp[0] == conclusion;
    }
};

// Least-fixpoint enumeration of all argument signatures: assumption and fact
// arguments seed the pool; each rule combines existing arguments for its body
// literals into a new signature. Witnesses are minimized by node count, ties
// broken by rule index then child order. Canonical ids: assumption-arguments
// first in literal order, then the rest ordered by (conclusion, ap, fp).
std::vector<Argument> enumerate_arguments(const AbaFramework& f);

// attacker's conclusion is the contrary of `assumption` ∈ attacked's ap.
struct Attack {
    int attacker;
    int attacked;
    Literal assumption;
    auto operator<=>(const Attack&) const = default;
};

struct AttackRelation {
    std::vector<Attack> edges;                   // sorted (attacker, attacked, assumption)
    std::vector<std::vector<int>> attackers_of;  // attacked index -> sorted unique attacker indices

    bool attacks(int attacker, int attacked) const;
};

AttackRelation compute_attacks(const AbaFramework& f, const std::vector<Argument>& args);

struct Extension {
    std::vector<int> members;    // sorted argument indices
    LiteralSet assumption_base;  // assumptions not countered by any member's conclusion
    std::string semantics;       // "stable"
};

// All stable extensions, by exhaustive search over assumption subsets D:
// X(D) = {A | ap(A) ⊆ D} is stable iff D equals exactly the assumptions whose
// contrary no member of X(D) concludes. Results ordered by assumption base.
// Throws std::runtime_error beyond 22 assumptions.
std::vector<Extension> stable_extensions(const AbaFramework& f,
                                         const std::vector<Argument>& args,
                                         const AttackRelation& attacks);

// Conflict-free and defends each member against every attacker in the
// framework. Throws std::invalid_argument on out-of-range ids.
bool is_admissible(const AbaFramework& f, const std::vector<Argument>& args,
                   const AttackRelation& attacks, const std::vector<int>& member_ids);

// The stable extension induced by an answer set: members are exactly the
// arguments whose assumption-premises hold by failure under s. Throws
// std::invalid_argument if s is not an answer set of the framework's program.
Extension corresponding_stable_extension(const AbaFramework& f,
                                         const std::vector<Argument>& args,
                                         const AnswerSetWithNAF& s);

// Members of e concluding k. Throws LiteralOutsideLanguage.
std::vector<int> corresponding_arguments(const AbaFramework& f,
                                         const std::vector<Argument>& args,
                                         const Extension& e, const Literal& k);

// Everything downstream modules need about one program, computed once.
struct AbaContext {
    AbaFramework framework;
    std::vector<Argument> arguments;
    AttackRelation attacks;

    const Argument& argument(int index) const;
    // Resolves "A<n>" ids; returns -1 if unknown.
    int argument_by_id(const std::string& id) const;
};

AbaContext make_context(const LogicProgram& p);

std::string to_string(const Argument& a);  // "A9: ({not -a}, {}) |- a"

}  // namespace asjust
