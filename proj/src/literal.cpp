#include "asjust/literal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asjust {

std::string to_string(const Literal& l) {
    std::string out;
    if (l.naf) out += "not ";
    if (l.classically_negated) out += "-";
    out += l.atom;
    return out;
}

Literal literal_from_string(const std::string& text) {
    std::string_view v(text);
    Literal l;
    if (v.substr(0, 4) == "not ") {
        l.naf = true;
        v.remove_prefix(4);
    }
    if (!v.empty() && v.front() == '-') {
        l.classically_negated = true;
        v.remove_prefix(1);
    }
    if (v.empty()) throw std::invalid_argument("empty literal: '" + text + "'");
    l.atom = std::string(v);
    return l;
}

LiteralSet make_set(std::vector<Literal> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    return lits;
}

bool contains(const LiteralSet& set, const Literal& l) {
    return std::binary_search(set.begin(), set.end(), l);
}

bool is_subset(const LiteralSet& sub, const LiteralSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

LiteralSet set_union(const LiteralSet& a, const LiteralSet& b) {
    LiteralSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void insert_into(LiteralSet& set, const Literal& l) {
    auto it = std::lower_bound(set.begin(), set.end(), l);
    if (it == set.end() || *it != l) set.insert(it, l);
}

std::string to_string(const LiteralSet& set) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) out << ", ";
        out << to_string(set[i]);
    }
    out << "}";
    return out.str();
}

}  // namespace asjust
