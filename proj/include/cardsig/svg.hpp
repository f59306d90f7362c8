// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <string>

#include "cardsig/gadgets.hpp"

namespace cardsig {

// Deterministic standalone SVG documents.  Rendering is the one place
// where exact rationals are flattened to doubles (display only).

std::string render_points_svg(const std::vector<Point>& pts);

// Optional edge coloring (frame/forced edges black by default).
std::string render_graph_svg(const PslGraph& g,
                             const std::map<Edge, EdgeColor>* colors = nullptr);

// Side-by-side pair with common edges black and private edges colored.
std::string render_pair_svg(const PslGraph& a, const PslGraph& b);

// Points annotated with their four cardinal degrees.
std::string render_signature_svg(const CardinalSignature& sig);

// Grid of the 17 tile glyphs.
std::string render_tiling_svg(const Tiling& t);

// Frame graph with cone fan.
std::string render_frame_svg(const FrameGraph& f);

// Dispatch by schema: {"points"} alone, {"points","edges"},
// {"points","degrees"}, {"w","h","rows"}, {"pair":[graph,graph]}, or a
// frame export with {"cells"}.  Throws Error{UnsupportedArtifact}.
std::string render_artifact(const Json& artifact);

}  // namespace cardsig
