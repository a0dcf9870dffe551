#pragma once

// Helpers shared between the Steenrod translation units.

#include "spancol/colouring.hpp"
#include "spancol/sr.hpp"

namespace spancol::detail {

// Checks field and dimension, then converts to the weak variant (which
// validates).
SpanColouring prepare_weak(const Graph& g, int n, const SpanColouring& c, int p);

// Minimal non-faces and P_max of the complex a ring is presented by.
// Vertices outside every facet are non-faces on their own.
std::vector<VertexSet> minimal_nonfaces_of(const Ring& r);
std::vector<VertexSet> p_max_of(const Ring& r);
std::string format_face(const Ring& r, VertexSet s);

}  // namespace spancol::detail
