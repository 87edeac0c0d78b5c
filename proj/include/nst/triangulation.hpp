#pragma once

// Data model for (possibly ideal) 3-manifold triangulations given as face
// gluings, together with the derived skeleton (edge / vertex classes) and
// vertex links.
//
// Conventions, frozen for bit-exact interchange:
//   * vertices of a tetrahedron are labelled 0..3;
//   * face f is the face opposite vertex f;
//   * edges 0..5 are 01, 02, 03, 12, 13, 23 in that order;
//   * quad type k (k = 0,1,2) separates the vertex pair {0, k+1} from the
//     rest, i.e. types 01|23, 02|13, 03|12; quad k is disjoint from edges
//     k and 5-k;
//   * every gluing permutation is odd, so all tetrahedra carry the
//     orientation induced by even vertex labellings.

#include "nst/permutation.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nst {

struct TriangulationError : std::runtime_error {
    explicit TriangulationError(const std::string& m) : std::runtime_error(m) {}
};

constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{{0, 1},
                                                           {0, 2},
                                                           {0, 3},
                                                           {1, 2},
                                                           {1, 3},
                                                           {2, 3}}};

/// Edge index of the pair {a,b}.
inline int edgeIndexOf(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == 0) return b - 1;      // 01,02,03 -> 0,1,2
    if (a == 1) return b + 1;      // 12,13    -> 3,4
    return 5;                      // 23
}

/// Quad type whose partition puts a and b in the same pair.
inline int quadTypeOfPair(int a, int b) {
    int e = edgeIndexOf(a, b);
    return e < 3 ? e : 5 - e;
}

/// The two quad types having a corner on edge e (all except quadTypeOfPair).
inline std::array<int, 2> quadTypesMeetingEdge(int e) {
    int avoid = e < 3 ? e : 5 - e;
    std::array<int, 2> out{};
    int n = 0;
    for (int k = 0; k < 3; ++k)
        if (k != avoid) out[n++] = k;
    return out;
}

struct Gluing {
    int tet = -1;
    Perm4 perm;
    bool operator==(const Gluing&) const = default;
};

using FaceSlot = std::optional<Gluing>;

class Skeleton;  // below

/// Immutable after construction; construction validates the gluing
/// involution, index ranges, and orientation coherence.
class Triangulation {
public:
    Triangulation(std::vector<std::array<FaceSlot, 4>> gluings, bool ideal)
        : glue_(std::move(gluings)), ideal_(ideal) {
        validate();
    }

    int size() const { return static_cast<int>(glue_.size()); }
    bool ideal() const { return ideal_; }

    const FaceSlot& gluing(int tet, int face) const { return glue_[tet][face]; }
    bool isBoundaryFace(int tet, int face) const { return !glue_[tet][face].has_value(); }

    /// Destination of (tet, face) under the gluing: (tet', face') where
    /// face' = perm(face).
    std::pair<int, int> adjacent(int tet, int face) const {
        const Gluing& g = *glue_[tet][face];
        return {g.tet, g.perm[face]};
    }

    bool hasBoundaryFaces() const {
        for (int i = 0; i < size(); ++i)
            for (int f = 0; f < 4; ++f)
                if (!glue_[i][f]) return true;
        return false;
    }

    std::string serialize() const;
    static Triangulation parse(const std::string& text, bool ideal);

    bool operator==(const Triangulation& o) const {
        return ideal_ == o.ideal_ && glue_ == o.glue_;
    }

private:
    std::vector<std::array<FaceSlot, 4>> glue_;
    bool ideal_;

    void validate() const;
};

// ---------------------------------------------------------------------------
// Skeleton

struct EdgeClass {
    int degree = 0;              // number of (tet, edge) incidences
    bool boundary = false;       // corridor hits a boundary face
    std::vector<std::pair<int, int>> incidences;  // (tet, edgeIdx)
};

struct VertexClass {
    bool boundary = false;       // lies in a boundary face
    std::vector<std::pair<int, int>> corners;     // (tet, vertex)
};

class Skeleton {
public:
    explicit Skeleton(const Triangulation& tri);

    const Triangulation& tri() const { return *tri_; }

    int countEdges() const { return static_cast<int>(edges_.size()); }
    int countVertices() const { return static_cast<int>(vertices_.size()); }
    const EdgeClass& edge(int i) const { return edges_[i]; }
    const VertexClass& vertex(int i) const { return vertices_[i]; }

    int edgeClassOf(int tet, int edgeIdx) const { return edgeClass_[tet][edgeIdx]; }
    /// True if this incidence carries the representative direction of its
    /// class: vertex kEdgeVertices[edgeIdx][0] maps to the class start.
    bool edgeForward(int tet, int edgeIdx) const { return edgeForward_[tet][edgeIdx]; }

    int vertexClassOf(int tet, int v) const { return vertexClass_[tet][v]; }

    /// Number of interior edge classes.
    int countInteriorEdges() const {
        int n = 0;
        for (const auto& e : edges_)
            if (!e.boundary) ++n;
        return n;
    }

    /// Boundary component of each boundary face (tet,face); -1 for glued faces.
    int boundaryComponentOf(int tet, int face) const { return bdryCompOfFace_[tet][face]; }
    int countBoundaryComponents() const { return nBdryComps_; }
    /// Euler characteristic of each boundary component surface.
    const std::vector<int>& boundaryChi() const { return bdryChi_; }
    /// genus (boundary components of oriented manifolds are orientable)
    int boundaryGenus(int comp) const { return (2 - bdryChi_[comp]) / 2; }

    /// Boundary component containing a boundary edge class; -1 for interior.
    int boundaryComponentOfEdge(int edgeClass) const { return bdryCompOfEdge_[edgeClass]; }
    /// Boundary component of a boundary vertex class; -1 for internal.
    int boundaryComponentOfVertex(int v) const { return bdryCompOfVertex_[v]; }

private:
    const Triangulation* tri_;
    std::vector<EdgeClass> edges_;
    std::vector<VertexClass> vertices_;
    std::vector<std::array<int, 6>> edgeClass_;
    std::vector<std::array<bool, 6>> edgeForward_;
    std::vector<std::array<int, 4>> vertexClass_;
    std::vector<std::array<int, 4>> bdryCompOfFace_;
    std::vector<int> bdryCompOfEdge_;
    std::vector<int> bdryCompOfVertex_;
    std::vector<int> bdryChi_;
    int nBdryComps_ = 0;

    void buildEdges();
    void buildVertices();
    void buildBoundary();
};

// ---------------------------------------------------------------------------
// Vertex links

/// The link of a vertex class, triangulated with one triangle per
/// tetrahedron corner.  Triangle i sits at corner corners[i] = (tet, v);
/// its side in face f of that tetrahedron (f != v) is glued to the
/// neighbouring corner's triangle side (or is a boundary side).
class VertexLink {
public:
    VertexLink(const Skeleton& skel, int vertexClass);

    int vertexClass() const { return vclass_; }
    int countTriangles() const { return static_cast<int>(corners_.size()); }
    const std::vector<std::pair<int, int>>& corners() const { return corners_; }

    /// triangle index of corner (tet, v); -1 if not part of this link
    int triangleAt(int tet, int v) const {
        auto it = triOf_.find({tet, v});
        return it == triOf_.end() ? -1 : it->second;
    }

    /// Neighbour of triangle t across its side in face f: (triangle, face on
    /// the far side), or (-1,-1) for a boundary side.
    std::pair<int, int> neighbour(int t, int f) const;

    bool closed() const { return closed_; }
    bool connected() const { return connected_; }
    bool orientable() const { return orientable_; }
    int chi() const { return chi_; }
    /// genus: orientable g with chi = 2-2g (closed) ; non-orientable
    /// crosscap count k with chi = 2-k.
    int genus() const { return orientable_ ? (2 - chi_) / 2 : 2 - chi_; }
    bool isTorus() const { return closed_ && connected_ && orientable_ && chi_ == 0; }
    bool isSphere() const { return closed_ && connected_ && orientable_ && chi_ == 2; }
    bool isDisc() const { return !closed_ && connected_ && orientable_ && chi_ == 1; }

    // link edge classes: pairs of (triangle, face) sides, or boundary sides
    int countLinkEdges() const { return static_cast<int>(linkEdges_.size()); }
    struct LinkEdge {
        int tri0, f0;        // one side
        int tri1 = -1, f1 = -1;  // other side; -1 for boundary
        bool boundary() const { return tri1 < 0; }
    };
    const LinkEdge& linkEdge(int i) const { return linkEdges_[i]; }
    int linkEdgeOf(int tri, int f) const { return sideEdge_.at({tri, f}); }

    // link vertices (= edge-end classes of the ambient triangulation)
    int countLinkVertices() const { return nLinkVerts_; }
    /// link-vertex id at corner triangle t, local corner on ambient edge
    /// {v, w}: pass the far endpoint w.
    int linkVertexAt(int t, int w) const { return cornerVert_.at({t, w}); }

    const Skeleton& skeleton() const { return *skel_; }

private:
    const Skeleton* skel_;
    int vclass_;
    std::vector<std::pair<int, int>> corners_;
    std::map<std::pair<int, int>, int> triOf_;
    std::vector<LinkEdge> linkEdges_;
    std::map<std::pair<int, int>, int> sideEdge_;   // (tri, faceIdx) -> edge id
    std::map<std::pair<int, int>, int> cornerVert_; // (tri, far endpoint) -> vertex id
    int nLinkVerts_ = 0;
    bool closed_ = true, connected_ = true, orientable_ = true;
    int chi_ = 0;
};

/// A vertex is treated as ideal when it is internal and its link is a
/// closed surface other than a sphere.
bool isIdealVertex(const Skeleton& skel, int vertexClass);

/// True when every vertex link is a sphere (internal) or disc (boundary).
/// `ideal` allows closed orientable links of any genus at internal vertices.
bool linksAreManifoldLike(const Skeleton& skel, bool ideal, std::string* whyNot = nullptr);

} // namespace nst
