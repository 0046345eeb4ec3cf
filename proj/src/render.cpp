#include "asjust/render.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace asjust {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string tag_string(const JustTag& t) {
    switch (t.kind) {
        case JustTag::assumption: return "asm";
        case JustTag::fact: return "fact";
        case JustTag::argument: return "A" + std::to_string(t.argument_index + 1);
        case JustTag::none: break;
    }
    return "";
}

JustTag tag_from_string(const std::string& s) {
    if (s == "asm") return {JustTag::assumption, -1};
    if (s == "fact") return {JustTag::fact, -1};
    if (s.size() >= 2 && s[0] == 'A') {
        int n = std::stoi(s.substr(1));
        return {JustTag::argument, n - 1};
    }
    throw std::invalid_argument("unknown justification tag: " + s);
}

ordered_json literal_to_json(const JustLiteral& l) {
    ordered_json out;
    out["literal"] = to_string(l.literal);
    if (l.sign) out["sign"] = std::string(1, to_char(*l.sign));
    if (l.tag.kind != JustTag::none) out["tag"] = tag_string(l.tag);
    return out;
}

JustLiteral literal_from_json(const ordered_json& v) {
    JustLiteral l;
    l.literal = literal_from_string(v.at("literal").get<std::string>());
    if (v.contains("sign"))
        l.sign = v.at("sign").get<std::string>() == "+" ? Sign::plus : Sign::minus;
    if (v.contains("tag")) l.tag = tag_from_string(v.at("tag").get<std::string>());
    return l;
}

// DOT double-quoted string escaping.
std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string sign_color(Sign s) { return s == Sign::plus ? "green" : "red"; }

void emit_justification_set_dot(const JustificationSet& set, size_t index, bool color,
                                std::ostringstream& out) {
    out << "digraph justification_set" << index << " {\n";
    std::vector<JustLiteral> nodes;
    nodes.push_back(set.subject);
    for (const JustPair& p : set.pairs) {
        nodes.push_back(p.source);
        nodes.push_back(p.target);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (const JustLiteral& n : nodes) {
        out << "  " << quoted(to_string(n));
        if (color && n.sign) out << " [color=" << sign_color(*n.sign) << "]";
        out << ";\n";
    }
    for (const JustPair& p : set.pairs) {
        out << "  " << quoted(to_string(p.source)) << " -> " << quoted(to_string(p.target))
            << " [style=" << (p.kind == JustPair::supp ? "dotted" : "solid") << "];\n";
    }
    out << "}\n";
}

struct TreeDotEmitter {
    const AbaContext& ctx;
    bool color;
    std::ostringstream& out;
    int next_id = 0;

    // Returns the DOT id of the emitted node; `path_ids` maps tree depth to
    // DOT id so repeat nodes can point back at their ancestor.
    int emit(const AttackTreeNode& n, std::vector<int>& path_ids) {
        int id = next_id++;
        const Argument& a = ctx.argument(n.argument);
        out << "  n" << id << " [label=" << quoted(a.id() + std::string(1, to_char(n.sign)))
            << ", tooltip=" << quoted(to_string(a));
        if (color) out << ", color=" << sign_color(n.sign);
        if (n.is_repeat()) out << ", style=dashed";
        out << "];\n";
        if (n.is_repeat()) {
            out << "  n" << id << " -> n" << path_ids[static_cast<size_t>(n.repeat_of)]
                << " [style=dashed];\n";
            return id;
        }
        path_ids.push_back(id);
        for (const AttackTreeNode& c : n.children) {
            int child = emit(c, path_ids);
            out << "  n" << id << " -> n" << child << ";\n";
        }
        path_ids.pop_back();
        return id;
    }
};

}  // namespace

std::string export_text(const AbaContext& ctx, const AttackTree& t, const RenderConfig&) {
    return to_string(ctx, t);
}

std::string export_text(const Justification& j, const RenderConfig&) {
    return to_string(j) + "\n";
}

std::string export_json(const Justification& j, const RenderConfig& cfg) {
    ordered_json out;
    out["subject"] = literal_to_json(j.subject);
    out["polarity"] = j.polarity == Justification::positive ? "positive" : "negative";
    out["variant"] = j.variant == Justification::basic ? "basic" : "labelled";
    out["sets"] = ordered_json::array();
    for (const JustificationSet& s : j.sets) {
        ordered_json set = ordered_json::array();
        for (const JustPair& p : s.pairs) {
            ordered_json pair;
            pair["kind"] = p.kind == JustPair::supp ? "supp_rel" : "att_rel";
            pair["source"] = literal_to_json(p.source);
            pair["target"] = literal_to_json(p.target);
            if (p.pair_sign()) pair["pair_sign"] = std::string(1, to_char(*p.pair_sign()));
            set.push_back(std::move(pair));
        }
        out["sets"].push_back(std::move(set));
    }
    // Labelled negative justifications label each set by its source argument;
    // keep those labels in a parallel array so the export is lossless.
    if (j.variant == Justification::labelled && j.polarity == Justification::negative &&
        !j.sets.empty()) {
        out["subjects"] = ordered_json::array();
        for (const JustificationSet& s : j.sets) out["subjects"].push_back(literal_to_json(s.subject));
    }
    return out.dump(cfg.indent) + "\n";
}

Justification justification_from_json(const std::string& text) {
    ordered_json in;
    try {
        in = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid justification JSON: ") + e.what());
    }
    try {
        Justification j;
        j.subject = literal_from_json(in.at("subject"));
        j.polarity = in.at("polarity").get<std::string>() == "positive"
                         ? Justification::positive
                         : Justification::negative;
        j.variant = in.at("variant").get<std::string>() == "basic" ? Justification::basic
                                                                   : Justification::labelled;
        for (const ordered_json& set : in.at("sets")) {
            JustificationSet s;
            s.subject = j.subject;
            for (const ordered_json& pair : set) {
                JustPair p;
                p.kind = pair.at("kind").get<std::string>() == "supp_rel" ? JustPair::supp
                                                                          : JustPair::att;
                p.source = literal_from_json(pair.at("source"));
                p.target = literal_from_json(pair.at("target"));
                s.pairs.push_back(std::move(p));
            }
            j.sets.push_back(std::move(s));
        }
        if (in.contains("subjects")) {
            const ordered_json& subjects = in.at("subjects");
            if (subjects.size() != j.sets.size())
                throw std::invalid_argument("subjects/sets length mismatch");
            for (size_t i = 0; i < j.sets.size(); ++i)
                j.sets[i].subject = literal_from_json(subjects.at(i));
        }
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid justification JSON: ") + e.what());
    }
}

std::string export_dot(const AbaContext& ctx, const AttackTree& t, const RenderConfig& cfg) {
    std::ostringstream out;
    out << "digraph attack_tree {\n";
    TreeDotEmitter emitter{ctx, cfg.color, out};
    std::vector<int> path_ids;
    emitter.emit(t.root, path_ids);
    out << "}\n";
    return out.str();
}

std::string export_dot(const Justification& j, const RenderConfig& cfg) {
    if (j.sets.empty()) return "// justification has no sets\n";
    std::ostringstream out;
    for (size_t i = 0; i < j.sets.size(); ++i) emit_justification_set_dot(j.sets[i], i, cfg.color, out);
    return out.str();
}

}  // namespace asjust
