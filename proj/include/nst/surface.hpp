#pragma once

// Reconstruction of normal surfaces from coordinate vectors, the explicit
// cell complex (disc instances, arc gluings, corner points), and
// classification.

#include "nst/arith.hpp"
#include "nst/coords.hpp"
#include "nst/cusp.hpp"
#include "nst/triangulation.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace nst {

/// One normal disc instance.  Triangles: which = corner vertex, level =
/// distance from the vertex (0 nearest).  Quads: which = quad type, level =
/// distance from the lower avoided edge (edge index `which`).
struct DiscInstance {
    int tet;
    bool quad;
    int which;
    int level;
};

class NormalSurface {
public:
    NormalSurface(const Skeleton& skel, IntVec stdCoords);

    const Skeleton& skeleton() const { return *skel_; }
    const IntVec& std() const { return std_; }
    IntVec quadCoords() const { return projectStdToQ(std_); }

    int countDiscs() const { return static_cast<int>(discs_.size()); }
    const DiscInstance& disc(int i) const { return discs_[i]; }
    int discIndex(int tet, bool quad, int which, int level) const;

    struct Arc {
        int disc0, face0;       // disc side in face face0 of its tetrahedron
        int disc1 = -1, face1 = -1;  // partner; -1 when on the boundary
        bool boundary() const { return disc1 < 0; }
    };
    int countArcs() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int i) const { return arcs_[i]; }

    /// corner points: per edge class, the number of intersection points
    const std::vector<int>& edgePoints() const { return edgePoints_; }

    bool closed() const { return closed_; }
    bool connected() const;
    /// connected components as separate surfaces (empty surface has none)
    std::vector<NormalSurface> components() const;
    int componentOf(int disc) const { return compOf_[disc]; }

    /// Two-sided / orientable test via transverse orientation propagation
    /// (the ambient triangulation is oriented).  Also fixes the side
    /// labelling used by cutting: side 0 of disc i faces its local
    /// reference (triangle: its vertex; quad: its lower avoided edge) iff
    /// sideBit(i) = 0.
    bool twoSided() const { return twoSided_; }
    int sideBit(int disc) const { return sideBit_[disc]; }

    Integer weight() const;
    Integer chi() const;  // cell complex V - E + F

    bool empty() const { return discs_.empty(); }

private:
    const Skeleton* skel_;
    IntVec std_;
    std::vector<DiscInstance> discs_;
    std::vector<Arc> arcs_;
    std::vector<int> arcOf_;        // (disc, faceslot 0..3) -> arc id
    std::vector<int> edgePoints_;
    std::vector<int> compOf_;
    std::vector<int> sideBit_;
    int nComponents_ = 0;
    bool closed_ = true;
    bool twoSided_ = true;

    void buildDiscs();
    void buildArcs();
    void buildSides();
    friend class CutComplex;
    int arcAt(int disc, int face) const { return arcOf_[4 * disc + face]; }
};

struct SurfaceClass {
    bool closed = false;
    bool connected = false;
    bool orientable = false;
    Integer chi = 0;
    Integer genus = 0;      // crosscap count when non-orientable
    bool isVertexLink = false;
    Integer weight = 0;
    int components = 1;
};

SurfaceClass classify(const NormalSurface& s);

/// True when the coordinates are a nonnegative combination of vertex-link
/// vectors (no quads, constant triangle count per vertex class).
bool isVertexLinkVector(const Skeleton& skel, const IntVec& stdCoords);

struct SpunReport {
    IntVec quadCoords;
    /// per cusp: vertex class and the two basis values
    struct Cusp {
        int vertexClass;
        Integer nu0, nu1;
    };
    std::vector<Cusp> cusps;
};

using ReconstructResult = std::variant<NormalSurface, SpunReport>;

/// Theorem-backed reconstruction: admissible x in the Q-matching kernel is
/// realised by the closed normal surface with minimal nonnegative triangle
/// coordinates, unless some boundary functional is nonzero, in which case a
/// SpunReport is returned.
ReconstructResult reconstructFromQ(const Skeleton& skel, const MatchingSystem& qMatching,
                                   const IntVec& x);

/// Algorithm step-2 selection: the primitive vector, or its double when the
/// primitive surface is one-sided.
struct RaySurface {
    NormalSurface surface;
    bool doubled;
};
RaySurface realizeRaySurface(const Skeleton& skel, const MatchingSystem& qMatching,
                             const IntVec& primitiveRay);

/// slope = -nu(lambda)/nu(mu); throws NotSpun when both vanish and reports
/// an infinite slope symbolically via the optional.
struct SlopeResult {
    bool infinite = false;
    Rational value = 0;
};
SlopeResult boundarySlope(const SpunReport& report, const VertexLink& link,
                          const MatchingSystem& qMatching, const CuspCurve& mu,
                          const CuspCurve& lambda);

} // namespace nst
