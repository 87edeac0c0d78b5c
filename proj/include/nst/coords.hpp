#pragma once

// Normal coordinates: quadrilateral (3t) and standard (7t) vectors, the
// exact integer matching systems, admissibility, and the linear Euler
// characteristic functional.
//
// Layouts (tet-major):
//   Q-vector:   index 3*tet + k,            k = quad type 0,1,2
//   Std-vector: index 7*tet + v (triangles, v = 0..3),
//               index 7*tet + 4 + k (quads).

#include "nst/arith.hpp"
#include "nst/triangulation.hpp"

#include <string>
#include <vector>

namespace nst {

struct MatchingSystem {
    IntMat rows;                          // one constraint per row
    std::vector<std::string> provenance;  // "edge:<i>", "face:<t>.<f>:arc<v>", "cusp:<...>"

    int rowCount() const { return static_cast<int>(rows.rows()); }
    int dimension() const { return static_cast<int>(rows.cols()); }
};

/// Signed slope of each quad type at each edge of a tetrahedron, for the
/// orientation induced by even vertex labellings.  slope[e] = {plusQuad,
/// minusQuad}: the two quad types meeting edge e with slopes +1 / -1.
constexpr std::array<std::array<int, 2>, 6> kQuadSlope{{{1, 2},
                                                        {2, 0},
                                                        {0, 1},
                                                        {0, 1},
                                                        {2, 0},
                                                        {1, 2}}};

/// One row per interior edge: sum of signed quad slopes around the edge.
MatchingSystem buildQMatching(const Skeleton& skel);

/// Three rows per internal face, one per normal arc type: t1 + q1 = t2 + q2.
MatchingSystem buildStdMatching(const Skeleton& skel);

/// Drop the triangle coordinates.
IntVec projectStdToQ(const IntVec& x);

inline int quadIndexQ(int tet, int k) { return 3 * tet + k; }
inline int triIndexStd(int tet, int v) { return 7 * tet + v; }
inline int quadIndexStd(int tet, int k) { return 7 * tet + 4 + k; }

/// x >= 0 with at most one positive quad type per tetrahedron.
bool isAdmissibleQ(const IntVec& x);    // length 3t
bool isAdmissibleStd(const IntVec& x);  // length 7t

/// Rational coefficient vector over standard coordinates whose value at any
/// admissible integral solution equals the Euler characteristic of the
/// reconstructed cell complex.  Requires a compact triangulation.
RatVec eulerFunctional(const Skeleton& skel);

/// True when the given disc type touches the given boundary component,
/// i.e. some corner of the disc lies on a boundary edge of that component.
bool discTouchesBoundary(const Skeleton& skel, int tet, bool isQuad, int which,
                         int boundaryComp);

/// Standard disc types touching the component (indices into a 7t vector).
std::vector<int> discsTouchingBoundary(const Skeleton& skel, int boundaryComp);

} // namespace nst
