#pragma once

#include <compare>
#include <string>
#include <vector>

namespace asjust {

// A ground literal. `atom` is the rendered ground atom (e.g. "p" or "p(a,b)"),
// `classically_negated` marks strong negation ("-a"), `naf` marks negation as
// failure ("not a", "not -a"). NAF literals never occur in clause heads.
//
// Ordering is (atom, classically_negated, naf), which fixes every deterministic
// ordering in the engine: a < not a < -a < not -a, and atoms by name.
struct Literal {
    std::string atom;
    bool classically_negated = false;
    bool naf = false;

    Literal() = default;
    Literal(std::string a, bool neg = false, bool n = false)
        : atom(std::move(a)), classically_negated(neg), naf(n) {}

    auto operator<=>(const Literal&) const = default;

    // "not l" for a classical literal l.
    Literal naf_negated() const { return Literal(atom, classically_negated, true); }
    // The classical literal under a NAF literal; identity on classical literals.
    // For an assumption "not l" this is its contrary l.
    Literal classical_part() const { return Literal(atom, classically_negated, false); }
    // The classical complement: a <-> -a. Only meaningful for classical literals.
    Literal complement() const { return Literal(atom, !classically_negated, false); }
};

// Parses "a", "-a", "not a", "not -a" (single spaces, as rendered by to_string).
// Throws std::invalid_argument on malformed input.
Literal literal_from_string(const std::string& text);

std::string to_string(const Literal& l);

// Sorted, duplicate-free literal vectors serve as sets throughout.
using LiteralSet = std::vector<Literal>;

LiteralSet make_set(std::vector<Literal> lits);          // sort + unique
bool contains(const LiteralSet& set, const Literal& l);  // binary search
bool is_subset(const LiteralSet& sub, const LiteralSet& super);
LiteralSet set_union(const LiteralSet& a, const LiteralSet& b);
void insert_into(LiteralSet& set, const Literal& l);

std::string to_string(const LiteralSet& set);  // "{a, -b, not c}"

}  // namespace asjust
