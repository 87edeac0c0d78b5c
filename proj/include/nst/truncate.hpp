#pragma once

// Truncation of ideal vertices: each tetrahedron is subdivided by the
// standard corner cutting into 4 corner pieces and one central piece, the
// pieces are triangulated by coning from an interior point over a fixed
// triangulation of their boundaries, and corner pieces at ideal vertices
// are discarded.  Each ideal vertex contributes one new boundary component,
// a copy of its link.

#include "nst/triangulation.hpp"

namespace nst {

/// Throws when the input has no ideal vertex.  When `idealBoundaryFaces` is
/// given it receives the boundary faces produced by the truncation (the
/// copies of the ideal vertex links), as (tet, face) pairs of the result.
Triangulation truncateIdealVertices(const Triangulation& tri,
                                    std::vector<std::pair<int, int>>* idealBoundaryFaces = nullptr);

} // namespace nst
