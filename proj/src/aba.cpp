#include "asjust/aba.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace asjust {

LiteralOutsideLanguage::LiteralOutsideLanguage(const Literal& l)
    : std::invalid_argument("literal outside the program's language: " + to_string(l)),
      literal(l) {}

Literal AbaFramework::contrary(const Literal& assumption) const {
    if (!assumption.naf)
        throw std::invalid_argument("not an assumption: " + to_string(assumption));
    return assumption.classical_part();
}

AbaFramework translate(const LogicProgram& p) {
    AbaFramework f;
    f.program = p;
    f.assumptions = p.universe.naf;
    return f;
}

int Derivation::node_count() const {
    int n = 1;
    for (const Derivation& c : children) n += c.node_count();
    return n;
}

namespace {

// One argument signature plus the best derivation found for it. Children are
// indices into the discovery-ordered signature pool.
struct SignatureEntry {
    Literal conclusion;
    LiteralSet ap;
    LiteralSet fp;
    bool leaf = false;  // assumption or fact seed
    int size = 0;       // witness node count
    int rule = -1;      // rule deriving the witness (leaves: -1)
    std::vector<int> children;
};

using SignatureKey = std::tuple<Literal, LiteralSet, LiteralSet>;

struct Enumerator {
    const AbaFramework& f;
    std::vector<SignatureEntry> pool;
    std::map<SignatureKey, int> index;
    std::map<Literal, std::vector<int>> by_conclusion;

    explicit Enumerator(const AbaFramework& fw) : f(fw) {}

    int add(SignatureEntry e) {
        SignatureKey key{e.conclusion, e.ap, e.fp};
        auto [it, fresh] = index.try_emplace(key, static_cast<int>(pool.size()));
        if (fresh) {
            by_conclusion[e.conclusion].push_back(it->second);
            pool.push_back(std::move(e));
        }
        return it->second;
    }

    void seed() {
        for (const Literal& a : f.assumptions)
            add({a, {a}, {}, true, 1, -1, {}});
        for (const Literal& fact : f.program.facts())
            add({fact, {}, {fact}, true, 1, -1, {}});
    }

    // For each rule, combine known arguments for the body literals into a new
    // signature; repeat until no signature is new. A NAF body literal can only
    // be backed by its assumption-argument, so the candidate lists stay exact.
    void close() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t r = 0; r < f.program.clauses.size(); ++r) {
                const Clause& c = f.program.clauses[r];
                if (c.is_fact()) continue;
                grew |= combine_rule(static_cast<int>(r), c);
            }
        }
    }

    bool combine_rule(int rule, const Clause& c) {
        std::vector<const std::vector<int>*> options;
        for (const Literal& b : c.body) {
            auto it = by_conclusion.find(b);
            if (it == by_conclusion.end()) return false;  // body literal underivable
            options.push_back(&it->second);
        }
        bool grew = false;
        std::vector<size_t> pick(options.size(), 0);
        while (true) {
            LiteralSet ap, fp;
            for (size_t i = 0; i < pick.size(); ++i) {
                const SignatureEntry& sub = pool[(*options[i])[pick[i]]];
                ap = set_union(ap, sub.ap);
                fp = set_union(fp, sub.fp);
            }
            size_t before = pool.size();
            std::vector<int> children;
            for (size_t i = 0; i < pick.size(); ++i) children.push_back((*options[i])[pick[i]]);
            add({c.head, std::move(ap), std::move(fp), false, 0, rule, std::move(children)});
            grew |= pool.size() > before;

            size_t i = pick.size();
            while (i > 0 && ++pick[i - 1] == options[i - 1]->size()) pick[--i] = 0;
            if (i == 0) break;
        }
        return grew;
    }

    // The closure records some derivation per signature; relax to the minimal
    // one (node count, then rule index, then child indices).
    void minimize_witnesses() {
        const int inf = std::numeric_limits<int>::max();
        for (SignatureEntry& e : pool)
            if (!e.leaf) e.size = inf;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t r = 0; r < f.program.clauses.size(); ++r) {
                const Clause& c = f.program.clauses[r];
                if (c.is_fact()) continue;
                changed |= relax_rule(static_cast<int>(r), c, inf);
            }
        }
    }

    bool relax_rule(int rule, const Clause& c, int inf) {
        std::vector<const std::vector<int>*> options;
        for (const Literal& b : c.body) {
            auto it = by_conclusion.find(b);
            if (it == by_conclusion.end()) return false;
            options.push_back(&it->second);
        }
        bool changed = false;
        std::vector<size_t> pick(options.size(), 0);
        while (true) {
            int size = 1;
            bool usable = true;
            LiteralSet ap, fp;
            std::vector<int> children;
            for (size_t i = 0; i < pick.size(); ++i) {
                const SignatureEntry& sub = pool[(*options[i])[pick[i]]];
                if (sub.size == inf) {
                    usable = false;
                    break;
                }
                size += sub.size;
                ap = set_union(ap, sub.ap);
                fp = set_union(fp, sub.fp);
                children.push_back((*options[i])[pick[i]]);
            }
            if (usable) {
                SignatureEntry& target = pool[index.at({c.head, ap, fp})];
                if (!target.leaf &&
                    std::tie(size, rule, children) <
                        std::tie(target.size, target.rule, target.children)) {
                    target.size = size;
                    target.rule = rule;
                    target.children = children;
                    changed = true;
                }
            }
            size_t i = pick.size();
            while (i > 0 && ++pick[i - 1] == options[i - 1]->size()) pick[--i] = 0;
            if (i == 0) break;
        }
        return changed;
    }

    Derivation build_witness(int idx, std::map<int, Derivation>& memo) const {
        auto it = memo.find(idx);
        if (it != memo.end()) return it->second;
        const SignatureEntry& e = pool[idx];
        Derivation d;
        d.lit = e.conclusion;
        d.rule = e.leaf ? -1 : e.rule;
        if (!e.leaf)
            for (int child : e.children) d.children.push_back(build_witness(child, memo));
        memo[idx] = d;
        return d;
    }
};

}  // namespace

std::vector<Argument> enumerate_arguments(const AbaFramework& f) {
    Enumerator en(f);
    en.seed();
    en.close();
    en.minimize_witnesses();

    std::vector<int> order(en.pool.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto rank = [&](int i) {
        const SignatureEntry& e = en.pool[i];
        bool is_asm = e.conclusion.naf;
        return std::make_tuple(is_asm ? 0 : 1, e.conclusion, e.ap, e.fp);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return rank(a) < rank(b); });

    std::map<int, Derivation> memo;
    std::vector<Argument> args;
    args.reserve(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        const SignatureEntry& e = en.pool[order[i]];
        Argument a;
        a.index = static_cast<int>(i);
        a.conclusion = e.conclusion;
        a.ap = e.ap;
        a.fp = e.fp;
        a.witness = en.build_witness(order[i], memo);
        args.push_back(std::move(a));
    }
    return args;
}

AttackRelation compute_attacks(const AbaFramework& f, const std::vector<Argument>& args) {
    std::map<Literal, std::vector<int>> by_conclusion;
    for (const Argument& a : args) by_conclusion[a.conclusion].push_back(a.index);

    AttackRelation rel;
    rel.attackers_of.resize(args.size());
    for (const Argument& target : args) {
        for (const Literal& assumption : target.ap) {
            auto it = by_conclusion.find(f.contrary(assumption));
            if (it == by_conclusion.end()) continue;
            for (int attacker : it->second) {
                rel.edges.push_back({attacker, target.index, assumption});
                rel.attackers_of[target.index].push_back(attacker);
            }
        }
    }
    std::sort(rel.edges.begin(), rel.edges.end());
    for (std::vector<int>& v : rel.attackers_of) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return rel;
}

bool AttackRelation::attacks(int attacker, int attacked) const {
    const std::vector<int>& in = attackers_of[attacked];
    return std::binary_search(in.begin(), in.end(), attacker);
}

namespace {

// Index of each assumption within f.assumptions, for mask arithmetic.
std::map<Literal, int> assumption_index(const AbaFramework& f) {
    std::map<Literal, int> idx;
    for (size_t i = 0; i < f.assumptions.size(); ++i)
        idx[f.assumptions[i]] = static_cast<int>(i);
    return idx;
}

Extension stable_extension_of(std::vector<int> members, LiteralSet base) {
    Extension e;
    e.members = std::move(members);
    e.assumption_base = std::move(base);
    e.semantics = "stable";
    return e;
}

}  // namespace

std::vector<Extension> stable_extensions(const AbaFramework& f,
                                         const std::vector<Argument>& args,
                                         const AttackRelation& attacks) {
    (void)attacks;
    const size_t n = f.assumptions.size();
    if (n > 22)
        throw std::runtime_error("too many assumptions for exhaustive stable-extension search: " +
                                 std::to_string(n));
    std::map<Literal, int> asm_idx = assumption_index(f);

    std::vector<uint64_t> ap_mask(args.size(), 0);
    std::vector<int> kill_bit(args.size(), -1);  // assumption countered by the conclusion
    for (const Argument& a : args) {
        for (const Literal& b : a.ap) ap_mask[a.index] |= uint64_t(1) << asm_idx.at(b);
        if (!a.conclusion.naf) {
            auto it = asm_idx.find(a.conclusion.naf_negated());
            if (it != asm_idx.end()) kill_bit[a.index] = it->second;
        }
    }

    const uint64_t all = (uint64_t(1) << n) - 1;
    std::vector<Extension> out;
    for (uint64_t delta = 0; delta <= all; ++delta) {
        uint64_t killed = 0;
        for (const Argument& a : args)
            if ((ap_mask[a.index] & ~delta) == 0 && kill_bit[a.index] >= 0)
                killed |= uint64_t(1) << kill_bit[a.index];
        if (delta != (all & ~killed)) continue;

        std::vector<int> members;
        LiteralSet base;
        for (const Argument& a : args)
            if ((ap_mask[a.index] & ~delta) == 0) members.push_back(a.index);
        for (size_t i = 0; i < n; ++i)
            if (delta & (uint64_t(1) << i)) base.push_back(f.assumptions[i]);
        out.push_back(stable_extension_of(std::move(members), std::move(base)));
    }
    std::sort(out.begin(), out.end(),
              [](const Extension& a, const Extension& b) { return a.assumption_base < b.assumption_base; });
    return out;
}

bool is_admissible(const AbaFramework& f, const std::vector<Argument>& args,
                   const AttackRelation& attacks, const std::vector<int>& member_ids) {
    (void)f;
    for (int m : member_ids)
        if (m < 0 || m >= static_cast<int>(args.size()))
            throw std::invalid_argument("argument index out of range: " + std::to_string(m));
    std::vector<int> members = member_ids;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto is_member = [&](int i) { return std::binary_search(members.begin(), members.end(), i); };

    // conflict-free
    for (int m : members)
        for (int attacker : attacks.attackers_of[m])
            if (is_member(attacker)) return false;
    // defends every member against every attacker
    for (int m : members)
        for (int attacker : attacks.attackers_of[m]) {
            bool defended = false;
            for (int defender : attacks.attackers_of[attacker])
                if (is_member(defender)) {
                    defended = true;
                    break;
                }
            if (!defended) return false;
        }
    return true;
}

Extension corresponding_stable_extension(const AbaFramework& f,
                                         const std::vector<Argument>& args,
                                         const AnswerSetWithNAF& s) {
    if (!is_answer_set(f.program, s.s))
        throw std::invalid_argument("not an answer set of the program: " + to_string(s.s));

    std::vector<int> members;
    for (const Argument& a : args)
        if (is_subset(a.ap, s.delta)) members.push_back(a.index);

    // Cheap restatement of stability: the admitted assumptions must be exactly
    // those whose contrary no member concludes.
    LiteralSet countered;
    for (int m : members)
        if (!args[m].conclusion.naf) insert_into(countered, args[m].conclusion.naf_negated());
    LiteralSet expected;
    for (const Literal& a : f.assumptions)
        if (!contains(countered, a)) expected.push_back(a);
    if (expected != s.delta)
        throw std::logic_error("answer set does not induce a stable extension");

    return stable_extension_of(std::move(members), s.delta);
}

std::vector<int> corresponding_arguments(const AbaFramework& f,
                                         const std::vector<Argument>& args,
                                         const Extension& e, const Literal& k) {
    if (!f.in_language(k)) throw LiteralOutsideLanguage(k);
    std::vector<int> out;
    for (int m : e.members)
        if (args[m].conclusion == k) out.push_back(m);
    return out;
}

const Argument& AbaContext::argument(int index) const { return arguments.at(index); }

int AbaContext::argument_by_id(const std::string& id) const {
    if (id.size() < 2 || id[0] != 'A') return -1;
    int n = 0;
    for (size_t i = 1; i < id.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return -1;
        n = n * 10 + (id[i] - '0');
    }
    return n >= 1 && n <= static_cast<int>(arguments.size()) ? n - 1 : -1;
}

AbaContext make_context(const LogicProgram& p) {
    AbaContext ctx;
    ctx.framework = translate(p);
    ctx.arguments = enumerate_arguments(ctx.framework);
    ctx.attacks = compute_attacks(ctx.framework, ctx.arguments);
    return ctx;
}

std::string to_string(const Argument& a) {
    std::ostringstream out;
    out << a.id() << ": (" << to_string(a.ap) << ", " << to_string(a.fp) << ") |- "
        << to_string(a.conclusion);
    return out.str();
}

}  // namespace asjust
