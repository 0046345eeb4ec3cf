#include "asjust/logic_program.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace asjust {

bool LiteralUniverse::contains_atom(const std::string& name) const {
    return std::binary_search(atoms.begin(), atoms.end(), name);
}

bool LiteralUniverse::contains(const Literal& l) const {
    return contains_atom(l.atom);  // closure makes every flag combination present
}

LogicProgram LogicProgram::from_clauses(std::vector<Clause> clauses) {
    LogicProgram p;
    std::set<std::string> atoms;
    for (const Clause& c : clauses) {
        if (c.head.naf)
            throw std::invalid_argument("clause head must be a classical literal: " +
                                        to_string(c.head));
        if (c.head.atom.empty()) throw std::invalid_argument("empty atom name in clause head");
        atoms.insert(c.head.atom);
        for (const Literal& b : c.body) {
            if (b.atom.empty()) throw std::invalid_argument("empty atom name in clause body");
            atoms.insert(b.atom);
        }
    }
    p.clauses = std::move(clauses);
    p.universe.atoms.assign(atoms.begin(), atoms.end());
    for (const std::string& a : p.universe.atoms) {
        p.universe.lit.push_back(Literal(a, false));
        p.universe.lit.push_back(Literal(a, true));
    }
    std::sort(p.universe.lit.begin(), p.universe.lit.end());
    for (const Literal& l : p.universe.lit) p.universe.naf.push_back(l.naf_negated());
    std::sort(p.universe.naf.begin(), p.universe.naf.end());
    return p;
}

LiteralSet LogicProgram::facts() const {
    std::vector<Literal> out;
    for (const Clause& c : clauses)
        if (c.is_fact()) out.push_back(c.head);
    return make_set(std::move(out));
}

LogicProgram reduct(const LogicProgram& p, const LiteralSet& s) {
    LogicProgram out;
    out.universe = p.universe;
    for (const Clause& c : p.clauses) {
        bool blocked = false;
        Clause r;
        r.head = c.head;
        for (const Literal& b : c.body) {
            if (!b.naf) {
                r.body.push_back(b);
            } else if (contains(s, b.classical_part())) {
                blocked = true;  // "not l" fails under s
                break;
            }
        }
        if (!blocked) out.clauses.push_back(std::move(r));
    }
    return out;
}

LiteralSet least_answer_set_positive(const LogicProgram& p) {
    for (const Clause& c : p.clauses)
        for (const Literal& b : c.body)
            if (b.naf)
                throw std::invalid_argument("program is not NAF-free: " + to_string(b));

    LiteralSet model;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Clause& c : p.clauses) {
            if (contains(model, c.head)) continue;
            bool fires = true;
            for (const Literal& b : c.body)
                if (!contains(model, b)) {
                    fires = false;
                    break;
                }
            if (fires) {
                insert_into(model, c.head);
                changed = true;
            }
        }
    }
    for (const Literal& l : model)
        if (!l.classically_negated && contains(model, l.complement()))
            return p.universe.lit;  // complementary pair: collapse to everything
    return model;
}

bool is_answer_set(const LogicProgram& p, const LiteralSet& s) {
    return least_answer_set_positive(reduct(p, s)) == s;
}

AnswerSetEnumeration enumerate_answer_sets(const LogicProgram& p) {
    std::vector<Literal> headv;
    for (const Clause& c : p.clauses) headv.push_back(c.head);
    LiteralSet heads = make_set(std::move(headv));
    if (heads.size() > 24)
        throw std::runtime_error("too many distinct clause heads for exhaustive search: " +
                                 std::to_string(heads.size()));

    AnswerSetEnumeration out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << heads.size()); ++mask) {
        LiteralSet s;
        for (size_t i = 0; i < heads.size(); ++i)
            if (mask & (uint64_t(1) << i)) s.push_back(heads[i]);
        if (!is_answer_set(p, s)) continue;
        bool complementary = false;
        for (const Literal& l : s)
            if (!l.classically_negated && contains(s, l.complement())) {
                complementary = true;
                break;
            }
        if (!complementary) out.answer_sets.push_back(naf_completion(p, s));
    }
    std::sort(out.answer_sets.begin(), out.answer_sets.end(),
              [](const AnswerSetWithNAF& a, const AnswerSetWithNAF& b) { return a.s < b.s; });
    // Covers both failure modes: no answer set at all, or only the full,
    // complementary-pair-containing literal set.
    out.inconsistent = out.answer_sets.empty();
    return out;
}

AnswerSetWithNAF naf_completion(const LogicProgram& p, const LiteralSet& s) {
    if (!is_answer_set(p, s))
        throw std::invalid_argument("not an answer set of the program: " + to_string(s));
    AnswerSetWithNAF out;
    out.s = s;
    for (const Literal& l : p.universe.lit)
        if (!contains(s, l)) out.delta.push_back(l.naf_negated());
    std::sort(out.delta.begin(), out.delta.end());
    out.s_naf = set_union(out.s, out.delta);
    return out;
}

LiteralSet mp_consequences(const LogicProgram& p, const LiteralSet& delta) {
    std::set<Literal> derived(delta.begin(), delta.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Clause& c : p.clauses) {
            if (derived.count(c.head)) continue;
            bool fires = true;
            for (const Literal& b : c.body)
                if (!derived.count(b)) {
                    fires = false;
                    break;
                }
            if (fires) {
                derived.insert(c.head);
                changed = true;
            }
        }
    }
    return LiteralSet(derived.begin(), derived.end());
}

bool derives_mp(const LogicProgram& p, const LiteralSet& delta, const Literal& k) {
    LiteralSet closure = mp_consequences(p, delta);
    return contains(closure, k);
}

}  // namespace asjust
