#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "asjust/attack_tree.hpp"

namespace asjust {

// A literal as it appears inside a justification. Basic justifications use the
// bare literal; labelled justifications add a sign and a provenance tag:
// `asm` for assumptions, `fact` for facts, or the index of the argument the
// occurrence speaks about.
struct JustTag {
    enum Kind { none, assumption, fact, argument } kind = none;
    int argument_index = -1;  // set iff kind == argument

    auto operator<=>(const JustTag&) const = default;
};

struct JustLiteral {
    Literal literal;
    std::optional<Sign> sign;  // engaged iff labelled
    JustTag tag;

    auto operator<=>(const JustLiteral&) const = default;
};

// supp_rel(source, target): source is a premise of an argument concluding
// target. att_rel(source, target): source is the contrary of assumption
// target. In labelled pairs the pair's sign is the sign of its source.
struct JustPair {
    enum Kind { supp, att } kind = supp;
    JustLiteral source;
    JustLiteral target;

    auto operator<=>(const JustPair&) const = default;
    std::optional<Sign> pair_sign() const { return source.sign; }
};

using JustPairSet = std::vector<JustPair>;  // sorted, unique

// One justification set: the (possibly labelled) subject plus its relation
// pairs. Negative justifications carry one entry per argument × tree, each with
// its own per-argument subject label.
struct JustificationSet {
    JustLiteral subject;
    JustPairSet pairs;

    bool operator==(const JustificationSet&) const = default;
};

struct Justification {
    enum Polarity { positive, negative };
    enum Variant { basic, labelled };

    JustLiteral subject;  // bare literal (basic) or labelled subject; for
                          // negative labelled justifications the per-set labels
                          // live in sets[i].subject and this holds literal+sign
    Polarity polarity = positive;
    Variant variant = basic;
    std::vector<JustificationSet> sets;  // positive: exactly one; negative: zero or more

    bool operator==(const Justification&) const = default;
};

// Flattens one attack tree into its relation pairs (set semantics; repeat
// nodes contribute nothing beyond the ancestor they copy). Every node yields
// supp pairs from its premises and att pairs toward its attacked assumptions.
JustPairSet basic_justification(const AbaContext& ctx, const AttackTree& t);

// Signed/tagged flattening: '+' nodes expose all their premises and incoming
// attackers; '-' nodes expose only the assumption the chosen defender attacks.
JustPairSet labelled_justification(const AbaContext& ctx, const AttackTree& t);

// Which corresponding argument and which of its attack trees a positive
// justification should flatten.
struct Selection {
    int argument = 0;  // index into corresponding_arguments(...)
    int tree = 0;      // index into enumerate_attack_trees(...)
};

// Positive justification of k ∈ s_naf from one argument and one tree chosen by
// `sel`; *_all enumerate every (argument, tree) combination. Negative
// justification of k ∉ s_naf collects one set per argument for k per tree,
// deduplicated on (subject label, pair set); no arguments means no sets.
// All entry points throw LiteralOutsideLanguage for unknown literals and
// std::invalid_argument when k is on the wrong side of the answer set or the
// selection is out of range.
Justification babas_positive(const AbaContext& ctx, const AnswerSetWithNAF& s,
                             const Literal& k, const Selection& sel = {});
std::vector<Justification> babas_positive_all(const AbaContext& ctx,
                                              const AnswerSetWithNAF& s, const Literal& k);
Justification babas_negative(const AbaContext& ctx, const AnswerSetWithNAF& s,
                             const Literal& k);
Justification labas_positive(const AbaContext& ctx, const AnswerSetWithNAF& s,
                             const Literal& k, const Selection& sel = {});
std::vector<Justification> labas_positive_all(const AbaContext& ctx,
                                              const AnswerSetWithNAF& s, const Literal& k);
Justification labas_negative(const AbaContext& ctx, const AnswerSetWithNAF& s,
                             const Literal& k);

// A justification set as a graph: nodes are the literals occurring in the
// pairs plus the set's subject; edges are the pairs.
struct JustGraph {
    std::vector<JustLiteral> nodes;  // sorted, unique
    JustPairSet edges;

    bool operator==(const JustGraph&) const = default;
};

// One graph per justification set.
std::vector<JustGraph> justification_graph(const Justification& j);

std::string to_string(const JustLiteral& l);      // "not e-_asm", "q+_A9", "a"
std::string to_string(const JustPair& p);         // "supp_rel-(not e-_asm, a-_A10)"
std::string to_string(const JustificationSet& s); // "{ q+_A9, supp_rel+(...), ... }"
std::string to_string(const Justification& j);

}  // namespace asjust
