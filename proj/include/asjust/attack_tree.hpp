#pragma once

#include <map>
#include <vector>

#include "asjust/aba.hpp"

namespace asjust {

enum class Sign { plus, minus };

inline char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// One node of a regular attack tree. A '+' node carries all attackers of its
// argument as '-' children; a '-' node carries exactly one '+' child — the
// chosen defender from the extension — or none when no attacker lies in the
// extension. A repeat node marks the second occurrence of an (argument, sign)
// pair along the path from the root: it has no stored children and refers back
// to the ancestor (by depth, root = 0) whose expansion it shares.
struct AttackTreeNode {
    int argument = -1;
    Sign sign = Sign::plus;
    int repeat_of = -1;
    std::vector<AttackTreeNode> children;

    bool operator==(const AttackTreeNode&) const = default;
    bool is_repeat() const { return repeat_of >= 0; }
};

struct AttackTree {
    AttackTreeNode root;
    std::vector<int> extension;       // the argument set the tree is built against
    std::map<int, int> defender_choice;  // '-' argument -> chosen defender, reachable entries only
};

// Builds the unique regular attack tree for `root_argument` against member set
// `x` under `defender_choice`. The root is signed by membership in x. Each
// reachable '-' argument with defenders in x must be mapped to one of them;
// mapping a non-attacker, an argument outside x, or omitting a needed entry is
// an invalid_argument, as is an out-of-range argument id.
AttackTree build_attack_tree(const AbaContext& ctx, const std::vector<int>& x,
                             int root_argument, const std::map<int, int>& defender_choice);

// All structurally distinct attack trees for `root_argument` against x: one per
// distinct defender choice over the '-' arguments actually reachable under that
// choice, explored in ascending defender order (hence deterministic).
std::vector<AttackTree> enumerate_attack_trees(const AbaContext& ctx,
                                               const std::vector<int>& x, int root_argument);

// Rebuilds the tree with each (argument, sign) pair allowed 1 + extra_levels
// occurrences on a path before closing with a repeat node, i.e. unfolds every
// back-reference extra_levels times. extra_levels == 0 reproduces the tree.
AttackTree unfold_attack_tree(const AbaContext& ctx, const AttackTree& t, int extra_levels);

// Arguments labelled '+' anywhere in the tree, sorted and unique.
std::vector<int> plus_arguments(const AttackTree& t);

// Abstract dispute tree view: '+' nodes are proponent moves, '-' opponent.
enum class DisputeStatus { proponent, opponent };

struct DisputeTreeNode {
    int argument = -1;
    DisputeStatus status = DisputeStatus::proponent;
    int repeat_of = -1;
    std::vector<DisputeTreeNode> children;

    bool operator==(const DisputeTreeNode&) const = default;
};

struct DisputeTree {
    DisputeTreeNode root;
};

DisputeTree translate_dispute_tree(const AttackTree& t);

// Admissible iff no argument labels both proponent and opponent nodes.
bool is_admissible_dispute_tree(const DisputeTree& t);

// Indented text rendering, one node per line ("A10-", nested children,
// "(repeat)" suffix on back-references).
std::string to_string(const AbaContext& ctx, const AttackTree& t);

}  // namespace asjust
