#include "asjust/attack_tree.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace asjust {

namespace {

struct PathEntry {
    int argument;
    Sign sign;
};

// Shared construction core. `repeat_limit` is how many times an (argument,
// sign) pair may occur on a root path before the next occurrence becomes a
// repeat back-reference; 1 gives the regular tree. When `collect_missing` is
// set, a '-' argument needing a choice that the map lacks is reported through
// it instead of raising an error (used by the enumerator to branch).
struct Builder {
    const AbaContext& ctx;
    const std::vector<int>& x;
    const std::map<int, int>& choice;
    int repeat_limit;
    std::optional<std::pair<int, std::vector<int>>>* collect_missing = nullptr;
    std::map<int, int> used_choices = {};

    bool in_x(int arg) const { return std::binary_search(x.begin(), x.end(), arg); }

    std::vector<int> defenders(int arg) const {
        std::vector<int> out;
        for (int attacker : ctx.attacks.attackers_of[arg])
            if (in_x(attacker)) out.push_back(attacker);
        return out;
    }

    int occurrences(const std::vector<PathEntry>& path, int arg, Sign sign) const {
        int n = 0;
        for (const PathEntry& e : path)
            if (e.argument == arg && e.sign == sign) ++n;
        return n;
    }

    int nearest_ancestor(const std::vector<PathEntry>& path, int arg, Sign sign) const {
        for (int i = static_cast<int>(path.size()) - 1; i >= 0; --i)
            if (path[i].argument == arg && path[i].sign == sign) return i;
        return -1;
    }

    // Returns nullopt when aborting to report a missing choice.
    std::optional<AttackTreeNode> build(int arg, Sign sign, std::vector<PathEntry>& path) {
        AttackTreeNode node;
        node.argument = arg;
        node.sign = sign;
        if (occurrences(path, arg, sign) >= repeat_limit) {
            node.repeat_of = nearest_ancestor(path, arg, sign);
            return node;
        }
        path.push_back({arg, sign});
        if (sign == Sign::plus) {
            for (int attacker : ctx.attacks.attackers_of[arg]) {
                auto child = build(attacker, Sign::minus, path);
                if (!child) return std::nullopt;
                node.children.push_back(std::move(*child));
            }
        } else {
            std::vector<int> d = defenders(arg);
            if (!d.empty()) {
                auto it = choice.find(arg);
                if (it == choice.end()) {
                    if (collect_missing) {
                        *collect_missing = {{arg, d}};
                        return std::nullopt;
                    }
                    throw std::invalid_argument("no defender chosen for argument A" +
                                                std::to_string(arg + 1));
                }
                if (std::find(d.begin(), d.end(), it->second) == d.end())
                    throw std::invalid_argument(
                        "chosen defender A" + std::to_string(it->second + 1) +
                        " does not attack A" + std::to_string(arg + 1) +
                        " from inside the extension");
                used_choices[arg] = it->second;
                auto child = build(it->second, Sign::plus, path);
                if (!child) return std::nullopt;
                node.children.push_back(std::move(*child));
            }
        }
        path.pop_back();
        return node;
    }
};

void check_ids(const AbaContext& ctx, const std::vector<int>& x, int root) {
    auto in_range = [&](int i) { return i >= 0 && i < static_cast<int>(ctx.arguments.size()); };
    if (!in_range(root))
        throw std::invalid_argument("argument index out of range: " + std::to_string(root));
    for (int m : x)
        if (!in_range(m))
            throw std::invalid_argument("extension member out of range: " + std::to_string(m));
}

AttackTree build_with_limit(const AbaContext& ctx, const std::vector<int>& x, int root_argument,
                            const std::map<int, int>& defender_choice, int repeat_limit) {
    check_ids(ctx, x, root_argument);
    std::vector<int> sorted_x = x;
    std::sort(sorted_x.begin(), sorted_x.end());
    Builder b{ctx, sorted_x, defender_choice, repeat_limit};
    std::vector<PathEntry> path;
    Sign root_sign = b.in_x(root_argument) ? Sign::plus : Sign::minus;
    auto root = b.build(root_argument, root_sign, path);
    AttackTree t;
    t.root = std::move(*root);  // never nullopt without collect_missing
    t.extension = std::move(sorted_x);
    t.defender_choice = std::move(b.used_choices);
    return t;
}

}  // namespace

AttackTree build_attack_tree(const AbaContext& ctx, const std::vector<int>& x,
                             int root_argument, const std::map<int, int>& defender_choice) {
    return build_with_limit(ctx, x, root_argument, defender_choice, 1);
}

std::vector<AttackTree> enumerate_attack_trees(const AbaContext& ctx,
                                               const std::vector<int>& x, int root_argument) {
    check_ids(ctx, x, root_argument);
    std::vector<int> sorted_x = x;
    std::sort(sorted_x.begin(), sorted_x.end());

    std::vector<AttackTree> out;
    // Depth-first over defender choices: extend the partial map at the first
    // '-' argument the construction hits without one, in ascending defender
    // order, so the result order is deterministic.
    std::vector<std::map<int, int>> worklist{{}};
    while (!worklist.empty()) {
        std::map<int, int> partial = std::move(worklist.back());
        worklist.pop_back();

        std::optional<std::pair<int, std::vector<int>>> missing;
        Builder b{ctx, sorted_x, partial, 1, &missing};
        std::vector<PathEntry> path;
        Sign root_sign = b.in_x(root_argument) ? Sign::plus : Sign::minus;
        auto root = b.build(root_argument, root_sign, path);
        if (!root) {
            // Push in reverse so the smallest defender is explored first.
            for (auto it = missing->second.rbegin(); it != missing->second.rend(); ++it) {
                std::map<int, int> next = partial;
                next[missing->first] = *it;
                worklist.push_back(std::move(next));
            }
            continue;
        }
        AttackTree t;
        t.root = std::move(*root);
        t.extension = sorted_x;
        t.defender_choice = std::move(b.used_choices);
        if (std::none_of(out.begin(), out.end(),
                         [&](const AttackTree& seen) { return seen.root == t.root; }))
            out.push_back(std::move(t));
    }
    return out;
}

AttackTree unfold_attack_tree(const AbaContext& ctx, const AttackTree& t, int extra_levels) {
    return build_with_limit(ctx, t.extension, t.root.argument, t.defender_choice,
                            1 + extra_levels);
}

namespace {

void collect_plus(const AttackTreeNode& n, std::vector<int>& out) {
    if (n.sign == Sign::plus) out.push_back(n.argument);
    for (const AttackTreeNode& c : n.children) collect_plus(c, out);
}

DisputeTreeNode to_dispute(const AttackTreeNode& n) {
    DisputeTreeNode d;
    d.argument = n.argument;
    d.status = n.sign == Sign::plus ? DisputeStatus::proponent : DisputeStatus::opponent;
    d.repeat_of = n.repeat_of;
    for (const AttackTreeNode& c : n.children) d.children.push_back(to_dispute(c));
    return d;
}

void collect_statuses(const DisputeTreeNode& n, std::vector<int>& prop, std::vector<int>& opp) {
    (n.status == DisputeStatus::proponent ? prop : opp).push_back(n.argument);
    for (const DisputeTreeNode& c : n.children) collect_statuses(c, prop, opp);
}

void render_node(const AbaContext& ctx, const AttackTreeNode& n, int depth, std::ostringstream& out) {
    out << std::string(static_cast<size_t>(depth) * 2, ' ') << ctx.argument(n.argument).id()
        << to_char(n.sign);
    if (n.is_repeat()) out << " (repeat)";
    out << "\n";
    for (const AttackTreeNode& c : n.children) render_node(ctx, c, depth + 1, out);
}

}  // namespace

std::vector<int> plus_arguments(const AttackTree& t) {
    std::vector<int> out;
    collect_plus(t.root, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DisputeTree translate_dispute_tree(const AttackTree& t) { return {to_dispute(t.root)}; }

bool is_admissible_dispute_tree(const DisputeTree& t) {
    std::vector<int> prop, opp;
    collect_statuses(t.root, prop, opp);
    std::sort(prop.begin(), prop.end());
    std::sort(opp.begin(), opp.end());
    std::vector<int> both;
    std::set_intersection(prop.begin(), prop.end(), opp.begin(), opp.end(),
                          std::back_inserter(both));
    return both.empty();
}

std::string to_string(const AbaContext& ctx, const AttackTree& t) {
    std::ostringstream out;
    render_node(ctx, t.root, 0, out);
    return out.str();
}

}  // namespace asjust
