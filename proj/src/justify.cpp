#include "asjust/justify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace asjust {

namespace {

JustLiteral bare(const Literal& l) { return {l, std::nullopt, {}}; }

JustLiteral labelled(const Literal& l, Sign sign, JustTag::Kind kind, int arg_index = -1) {
    return {l, sign, {kind, kind == JustTag::argument ? arg_index : -1}};
}

void insert_pair(JustPairSet& set, JustPair p) {
    auto it = std::lower_bound(set.begin(), set.end(), p);
    if (it == set.end() || *it != p) set.insert(it, std::move(p));
}

// Walk every non-repeat node: a repeat node shares its (argument, sign) with an
// ancestor already visited, so under set semantics it adds nothing — though as
// a *child* it still witnesses its parent's attack pairs.
template <typename Visit>
void walk(const AttackTreeNode& n, Visit&& visit) {
    if (n.is_repeat()) return;
    visit(n);
    for (const AttackTreeNode& c : n.children) walk(c, visit);
}

JustPairSet flatten_basic(const AbaContext& ctx, const AttackTree& t) {
    JustPairSet out;
    walk(t.root, [&](const AttackTreeNode& n) {
        const Argument& a = ctx.argument(n.argument);
        for (const Literal& k : set_union(a.ap, a.fp))
            if (k != a.conclusion)
                insert_pair(out, {JustPair::supp, bare(k), bare(a.conclusion)});
        for (const AttackTreeNode& child : n.children) {
            const Literal& c = ctx.argument(child.argument).conclusion;
            insert_pair(out, {JustPair::att, bare(c), bare(c.naf_negated())});
        }
    });
    return out;
}

JustPairSet flatten_labelled(const AbaContext& ctx, const AttackTree& t) {
    JustPairSet out;
    walk(t.root, [&](const AttackTreeNode& n) {
        const Argument& a = ctx.argument(n.argument);
        if (n.sign == Sign::plus) {
            JustLiteral conc = labelled(a.conclusion, Sign::plus, JustTag::argument, a.index);
            for (const Literal& k : a.ap)
                if (k != a.conclusion)
                    insert_pair(out, {JustPair::supp,
                                      labelled(k, Sign::plus, JustTag::assumption), conc});
            for (const Literal& k : a.fp)
                if (k != a.conclusion)
                    insert_pair(out, {JustPair::supp, labelled(k, Sign::plus, JustTag::fact), conc});
            for (const AttackTreeNode& child : n.children) {
                const Argument& m = ctx.argument(child.argument);
                insert_pair(out, {JustPair::att,
                                  labelled(m.conclusion, Sign::minus, JustTag::argument, m.index),
                                  labelled(m.conclusion.naf_negated(), Sign::plus,
                                           JustTag::assumption)});
            }
        } else {
            // A '-' node exposes only the assumption its chosen defender
            // attacks; a childless '-' node exposes nothing.
            for (const AttackTreeNode& child : n.children) {
                const Argument& m = ctx.argument(child.argument);
                Literal attacked = m.conclusion.naf_negated();
                if (attacked != a.conclusion)
                    insert_pair(out, {JustPair::supp,
                                      labelled(attacked, Sign::minus, JustTag::assumption),
                                      labelled(a.conclusion, Sign::minus, JustTag::argument,
                                               a.index)});
                insert_pair(out, {JustPair::att,
                                  m.is_fact_argument()
                                      ? labelled(m.conclusion, Sign::plus, JustTag::fact)
                                      : labelled(m.conclusion, Sign::plus, JustTag::argument,
                                                 m.index),
                                  labelled(attacked, Sign::minus, JustTag::assumption)});
            }
        }
    });
    return out;
}

struct PositiveInputs {
    Extension extension;
    std::vector<int> args;  // corresponding arguments for k
};

void require_in_language(const AbaContext& ctx, const Literal& k) {
    if (!ctx.framework.in_language(k)) throw LiteralOutsideLanguage(k);
}

PositiveInputs positive_inputs(const AbaContext& ctx, const AnswerSetWithNAF& s,
                               const Literal& k) {
    require_in_language(ctx, k);
    if (!contains(s.s_naf, k))
        throw std::invalid_argument("literal is not in the answer set: " + to_string(k));
    PositiveInputs in;
    in.extension = corresponding_stable_extension(ctx.framework, ctx.arguments, s);
    in.args = corresponding_arguments(ctx.framework, ctx.arguments, in.extension, k);
    return in;
}

// The subject label of a positively justified literal.
JustLiteral positive_subject(const AbaContext& ctx, const Literal& k, int chosen_arg) {
    if (k.naf) return labelled(k, Sign::plus, JustTag::assumption);
    if (contains(ctx.framework.program.facts(), k)) return labelled(k, Sign::plus, JustTag::fact);
    return labelled(k, Sign::plus, JustTag::argument, chosen_arg);
}

Justification make_positive(const AbaContext& ctx, const AnswerSetWithNAF& s, const Literal& k,
                            const Selection& sel, Justification::Variant variant) {
    PositiveInputs in = positive_inputs(ctx, s, k);
    if (sel.argument < 0 || sel.argument >= static_cast<int>(in.args.size()))
        throw std::invalid_argument("argument selection out of range: " +
                                    std::to_string(sel.argument));
    int arg = in.args[sel.argument];
    std::vector<AttackTree> trees = enumerate_attack_trees(ctx, in.extension.members, arg);
    if (sel.tree < 0 || sel.tree >= static_cast<int>(trees.size()))
        throw std::invalid_argument("tree selection out of range: " + std::to_string(sel.tree));

    Justification j;
    j.polarity = Justification::positive;
    j.variant = variant;
    if (variant == Justification::basic) {
        j.subject = bare(k);
        j.sets.push_back({j.subject, flatten_basic(ctx, trees[sel.tree])});
    } else {
        j.subject = positive_subject(ctx, k, arg);
        j.sets.push_back({j.subject, flatten_labelled(ctx, trees[sel.tree])});
    }
    return j;
}

std::vector<Justification> make_positive_all(const AbaContext& ctx, const AnswerSetWithNAF& s,
                                             const Literal& k, Justification::Variant variant) {
    PositiveInputs in = positive_inputs(ctx, s, k);
    std::vector<Justification> out;
    for (int ai = 0; ai < static_cast<int>(in.args.size()); ++ai) {
        int trees = static_cast<int>(
            enumerate_attack_trees(ctx, in.extension.members, in.args[ai]).size());
        for (int ti = 0; ti < trees; ++ti)
            out.push_back(make_positive(ctx, s, k, {ai, ti}, variant));
    }
    return out;
}

Justification make_negative(const AbaContext& ctx, const AnswerSetWithNAF& s, const Literal& k,
                            Justification::Variant variant) {
    require_in_language(ctx, k);
    if (contains(s.s_naf, k))
        throw std::invalid_argument("literal is in the answer set: " + to_string(k));

    Extension e = corresponding_stable_extension(ctx.framework, ctx.arguments, s);
    Justification j;
    j.polarity = Justification::negative;
    j.variant = variant;
    j.subject = variant == Justification::basic ? bare(k)
                                                : JustLiteral{k, Sign::minus, {}};

    std::set<std::pair<JustLiteral, JustPairSet>> seen;
    for (const Argument& a : ctx.arguments) {
        if (a.conclusion != k) continue;
        JustLiteral set_subject =
            variant == Justification::basic
                ? bare(k)
                : (k.naf ? labelled(k, Sign::minus, JustTag::assumption)
                         : labelled(k, Sign::minus, JustTag::argument, a.index));
        for (const AttackTree& t : enumerate_attack_trees(ctx, e.members, a.index)) {
            JustPairSet pairs = variant == Justification::basic ? flatten_basic(ctx, t)
                                                                : flatten_labelled(ctx, t);
            if (seen.insert({set_subject, pairs}).second)
                j.sets.push_back({set_subject, std::move(pairs)});
        }
    }
    return j;
}

}  // namespace

JustPairSet basic_justification(const AbaContext& ctx, const AttackTree& t) {
    return flatten_basic(ctx, t);
}

JustPairSet labelled_justification(const AbaContext& ctx, const AttackTree& t) {
    return flatten_labelled(ctx, t);
}

Justification babas_positive(const AbaContext& ctx, const AnswerSetWithNAF& s, const Literal& k,
                             const Selection& sel) {
    return make_positive(ctx, s, k, sel, Justification::basic);
}

std::vector<Justification> babas_positive_all(const AbaContext& ctx, const AnswerSetWithNAF& s,
                                              const Literal& k) {
    return make_positive_all(ctx, s, k, Justification::basic);
}

Justification babas_negative(const AbaContext& ctx, const AnswerSetWithNAF& s, const Literal& k) {
    return make_negative(ctx, s, k, Justification::basic);
}

Justification labas_positive(const AbaContext& ctx, const AnswerSetWithNAF& s, const Literal& k,
                             const Selection& sel) {
    return make_positive(ctx, s, k, sel, Justification::labelled);
}

std::vector<Justification> labas_positive_all(const AbaContext& ctx, const AnswerSetWithNAF& s,
                                              const Literal& k) {
    return make_positive_all(ctx, s, k, Justification::labelled);
}

Justification labas_negative(const AbaContext& ctx, const AnswerSetWithNAF& s, const Literal& k) {
    // Facts head an argument with no assumption-premises, which belongs to
    // every stable extension, so a fact can never be on the negative side of a
    // consistent answer set.
    if (!k.naf && contains(ctx.framework.program.facts(), k) && !contains(s.s_naf, k))
        throw std::logic_error("fact outside its own answer set: " + to_string(k));
    return make_negative(ctx, s, k, Justification::labelled);
}

std::vector<JustGraph> justification_graph(const Justification& j) {
    std::vector<JustGraph> out;
    for (const JustificationSet& set : j.sets) {
        JustGraph g;
        std::set<JustLiteral> nodes;
        nodes.insert(set.subject);
        for (const JustPair& p : set.pairs) {
            nodes.insert(p.source);
            nodes.insert(p.target);
        }
        g.nodes.assign(nodes.begin(), nodes.end());
        g.edges = set.pairs;
        out.push_back(std::move(g));
    }
    return out;
}

std::string to_string(const JustLiteral& l) {
    std::string out = to_string(l.literal);
    if (l.sign) out += to_char(*l.sign);
    switch (l.tag.kind) {
        case JustTag::none: break;
        case JustTag::assumption: out += "_asm"; break;
        case JustTag::fact: out += "_fact"; break;
        case JustTag::argument: out += "_A" + std::to_string(l.tag.argument_index + 1); break;
    }
    return out;
}

std::string to_string(const JustPair& p) {
    std::string out = p.kind == JustPair::supp ? "supp_rel" : "att_rel";
    if (p.pair_sign()) out += to_char(*p.pair_sign());
    out += "(" + to_string(p.source) + ", " + to_string(p.target) + ")";
    return out;
}

std::string to_string(const JustificationSet& s) {
    std::string out = "{ " + to_string(s.subject);
    for (const JustPair& p : s.pairs) out += ", " + to_string(p);
    return out + " }";
}

std::string to_string(const Justification& j) {
    std::ostringstream out;
    out << (j.variant == Justification::basic ? "justB" : "justL")
        << (j.polarity == Justification::positive ? "+" : "-") << "("
        << to_string(j.subject.literal) << ")";
    if (j.polarity == Justification::positive) {
        out << " = " << to_string(j.sets.at(0));
    } else {
        out << " = " << j.sets.size() << " set(s)";
        for (const JustificationSet& s : j.sets) out << "\n  " << to_string(s);
    }
    return out.str();
}

}  // namespace asjust
