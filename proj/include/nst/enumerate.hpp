#pragma once

// Exact enumeration of admissible extremal rays of polyhedral cones
//   { x >= 0,  A x = 0,  (optional) B x >= 0 }
// with the quad-space admissibility filter (at most one positive coordinate
// per 3-element block), via the double description method, plus an
// exhaustive low-dimensional oracle.

#include "nst/arith.hpp"
#include "nst/coords.hpp"

#include <optional>
#include <vector>

namespace nst {

struct ConeSpec {
    int dimension = 0;
    IntMat equalities;    // rows annihilating the cone
    IntMat inequalities;  // rows required nonnegative (besides x >= 0); may be empty
    /// Admissibility partition: coordinate triples (one per tetrahedron).
    /// Empty means no admissibility constraint.
    std::vector<std::array<int, 3>> triples;

    bool admissible(const IntVec& x) const {
        for (const auto& tr : triples) {
            int pos = 0;
            for (int c : tr)
                if (x[c] > 0) ++pos;
            if (pos > 1) return false;
        }
        return true;
    }
};

/// Quad cone Q(T): nonnegative solutions of the Q-matching equations.
ConeSpec qConeSpec(const Skeleton& skel, const MatchingSystem& qMatching);
/// Q0(T): additionally all boundary functionals vanish (two rows per cusp).
ConeSpec q0ConeSpec(const Skeleton& skel, const MatchingSystem& qMatching);

struct Ray {
    IntVec vector;              // primitive, all entries >= 0
    std::vector<int> support;

    bool operator==(const Ray& o) const { return vector == o.vector; }
};

/// Exactly the admissible extremal rays, as primitive vectors in
/// lexicographically increasing order.  Every output ray is certified:
/// rank of the equality system restricted to its support = |support| - 1
/// (with inequality rows active at the ray included).
std::vector<Ray> enumerateAdmissibleRays(const ConeSpec& spec);

/// Exhaustive support enumeration; dimension guarded (<= 12 by default).
std::vector<Ray> bruteForceRays(const ConeSpec& spec, int dimensionGuard = 12);

} // namespace nst
