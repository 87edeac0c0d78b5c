#pragma once

// Boundary (spinning) functionals.  A cusp curve is a closed walk in the
// dual 1-skeleton of a vertex-link triangulation; its functional tallies the
// quad types whose normal arcs it crosses, +q entering a triangle across
// the matching arc and -q leaving.  For x satisfying the Q-matching
// equations the value depends only on the homology class of the curve, and
// the reconstructed surface is closed iff all such values vanish.

#include "nst/arith.hpp"
#include "nst/coords.hpp"
#include "nst/triangulation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nst {

struct CuspCurve {
    int vertexClass = -1;
    /// Steps (linkTriangle, faceIdx): leave this triangle across its side in
    /// the given face of the ambient tetrahedron.  Consecutive steps (cyclic)
    /// must chain: the triangle entered by one step is the triangle of the
    /// next.
    std::vector<std::pair<int, int>> steps;
    std::string name;  // optional, e.g. "mu", "lambda"
};

/// Validates closedness and chaining against the link.
void validateCurve(const VertexLink& link, const CuspCurve& c);

struct BoundaryFunctional {
    IntVec raw;       // crossing tally (length 3t)
    RatVec reduced;   // canonical representative modulo the Q-matching rows
    CuspCurve curve;

    Integer evaluate(const IntVec& x) const { return dotII(raw, x); }
};

BoundaryFunctional boundaryFunctional(const VertexLink& link, const MatchingSystem& qMatching,
                                      const CuspCurve& c);

/// Reverse the direction of a walk.
CuspCurve reversed(const VertexLink& link, const CuspCurve& c);

/// An elementary dual loop around the given link vertex (one of the ends of
/// an ambient edge class); its functional reproduces that edge's Q-matching
/// row up to sign.
CuspCurve elementaryLoop(const VertexLink& link, int linkVertex);

/// Two closed dual walks whose homology classes form a basis of H1 of the
/// link torus, deterministic via a spanning tree of the dual graph in
/// canonical order.  Throws when the link is not a torus.
std::vector<CuspCurve> boundaryBasis(const VertexLink& link, const MatchingSystem& qMatching);

} // namespace nst
