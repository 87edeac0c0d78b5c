#pragma once

// First homology of the underlying cell complex, via Smith normal form of
// the simplicial boundary maps.  Ideal triangulations are computed on the
// truncated manifold.

#include "nst/arith.hpp"
#include "nst/triangulation.hpp"

#include <string>
#include <vector>

namespace nst {

struct AbelianGroup {
    int rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, in divisor order

    bool operator==(const AbelianGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
    bool trivial() const { return rank == 0 && torsion.empty(); }
    std::string str() const;
};

/// Oriented chain complex of the quotient cell structure.
struct ChainComplex {
    IntMat d1;  // vertices x edges
    IntMat d2;  // edges x faces
    IntMat d3;  // faces x tets
    // face class data for orientation bookkeeping
    std::vector<std::pair<int, int>> faceReps;  // canonical (tet, face)
};

ChainComplex buildChainComplex(const Skeleton& skel);

/// H1 of the cell complex itself (no truncation).
AbelianGroup homologyH1Raw(const Skeleton& skel);

/// H1 per the module contract: ideal triangulations are truncated first.
AbelianGroup homologyH1(const Triangulation& tri);

} // namespace nst
