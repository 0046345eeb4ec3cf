#pragma once

#include <string>

#include "asjust/justify.hpp"

namespace asjust {

struct RenderConfig {
    std::string format = "text";  // "text" | "json" | "dot"
    bool color = true;            // DOT only: green '+' / red '-' node fill
    int indent = 2;               // text tree indent and JSON pretty-print width
};

// --- text ---------------------------------------------------------------
std::string export_text(const AbaContext& ctx, const AttackTree& t, const RenderConfig& cfg = {});
std::string export_text(const Justification& j, const RenderConfig& cfg = {});

// --- json ---------------------------------------------------------------
// Schema: { "subject": {literal, sign?, tag?}, "polarity", "variant",
//           "sets": [ [ {kind, source, target, pair_sign?} ] ] }
// plus an optional "subjects" array (per-set subject labels) emitted only for
// labelled negative justifications, so exports stay lossless. Keys keep the
// order above; arrays are in the engine's deterministic order.
std::string export_json(const Justification& j, const RenderConfig& cfg = {});

// Inverse of export_json; throws std::invalid_argument on schema violations.
Justification justification_from_json(const std::string& text);

// --- dot ----------------------------------------------------------------
// Attack trees: one node per tree node, solid edges child -> parent attacks
// are implicit in structure (edges parent -> child), repeat nodes dashed with
// a dashed back-edge to the ancestor they copy.
std::string export_dot(const AbaContext& ctx, const AttackTree& t, const RenderConfig& cfg = {});
// Justifications: one digraph per set; supp_rel edges dotted, att_rel edges
// solid; labelled nodes are colored by sign when cfg.color.
std::string export_dot(const Justification& j, const RenderConfig& cfg = {});

}  // namespace asjust
