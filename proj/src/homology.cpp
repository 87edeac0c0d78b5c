#include "nst/homology.hpp"

#include "nst/linalg.hpp"
#include "nst/truncate.hpp"

#include <sstream>

namespace nst {

std::string AbelianGroup::str() const {
    std::ostringstream os;
    bool first = true;
    if (rank == 1) { os << "Z"; first = false; }
    else if (rank > 1) { os << "Z^" << rank; first = false; }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Orientation of an edge inside a face: face (tet, f) has vertices
// v0 < v1 < v2 (all != f); its boundary is [v0v1] + [v1v2] - [v0v2].
struct FaceVerts {
    int v[3];
};

FaceVerts faceVerts(int f) {
    FaceVerts fv{};
    int n = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) fv.v[n++] = v;
    return fv;
}

} // namespace

ChainComplex buildChainComplex(const Skeleton& skel) {
    const Triangulation& tri = skel.tri();
    const int t = tri.size();

    // face classes
    std::vector<std::pair<int, int>> faceReps;
    std::map<std::pair<int, int>, int> faceClass;
    std::map<std::pair<int, int>, int> sign;  // +1 if (tet,face) orientation matches rep
    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f) {
            if (faceClass.count({i, f})) continue;
            int id = static_cast<int>(faceReps.size());
            faceReps.emplace_back(i, f);
            faceClass[{i, f}] = id;
            sign[{i, f}] = 1;
            const FaceSlot& g = tri.gluing(i, f);
            if (g) {
                int i2 = g->tet, f2 = g->perm[f];
                faceClass[{i2, f2}] = id;
                // rep orientation: cyclic order of sorted vertices of (i,f).
                // The image orientation under perm is compared with the
                // sorted order of (i2,f2): sign = parity of the induced
                // 3-permutation.
                FaceVerts a = faceVerts(f);
                int img[3] = {g->perm[a.v[0]], g->perm[a.v[1]], g->perm[a.v[2]]};
                // parity of img relative to sorted
                int s = 1;
                for (int x = 0; x < 3; ++x)
                    for (int y = x + 1; y < 3; ++y)
                        if (img[x] > img[y]) s = -s;
                sign[{i2, f2}] = s;
            }
        }

    const int E = skel.countEdges();
    const int V = skel.countVertices();
    const int F = static_cast<int>(faceReps.size());

    ChainComplex cc;
    cc.faceReps = faceReps;
    cc.d1 = IntMat::Zero(V, E);
    cc.d2 = IntMat::Zero(E, F);
    cc.d3 = IntMat::Zero(F, t);

    // d1: edge class rep direction from edgeForward of its first incidence.
    for (int e = 0; e < E; ++e) {
        auto [tet, ei] = skel.edge(e).incidences.front();
        int a = kEdgeVertices[ei][0], b = kEdgeVertices[ei][1];
        if (!skel.edgeForward(tet, ei)) std::swap(a, b);  // forward means a -> b
        cc.d1(skel.vertexClassOf(tet, a), e) -= 1;
        cc.d1(skel.vertexClassOf(tet, b), e) += 1;
    }

    // d2: boundary of each face rep.
    for (int fc = 0; fc < F; ++fc) {
        auto [tet, f] = faceReps[fc];
        FaceVerts fv = faceVerts(f);
        const int pairs[3][2] = {{fv.v[0], fv.v[1]}, {fv.v[1], fv.v[2]}, {fv.v[0], fv.v[2]}};
        const int psign[3] = {1, 1, -1};
        for (int k = 0; k < 3; ++k) {
            int a = pairs[k][0], b = pairs[k][1];  // a < b
            int ei = edgeIndexOf(a, b);
            int cls = skel.edgeClassOf(tet, ei);
            int dir = skel.edgeForward(tet, ei) ? 1 : -1;  // (a->b) vs rep
            cc.d2(cls, fc) += psign[k] * dir;
        }
    }

    // d3: boundary of each (positively oriented) tetrahedron: faces opposite
    // v get sign (-1)^v relative to the sorted-vertex orientation.
    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f) {
            int fc = faceClass.at({i, f});
            int s = sign.at({i, f});
            int faceSign = (f % 2 == 0) ? 1 : -1;
            cc.d3(fc, i) += faceSign * s;
        }

    return cc;
}

AbelianGroup homologyH1Raw(const Skeleton& skel) {
    ChainComplex cc = buildChainComplex(skel);
    const int E = static_cast<int>(cc.d1.cols());
    int rank1 = rankOf(cc.d1);
    std::vector<Integer> inv = smithInvariantFactors(cc.d2);
    int rank2 = static_cast<int>(inv.size());
    AbelianGroup g;
    g.rank = E - rank1 - rank2;
    for (const auto& d : inv)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

AbelianGroup homologyH1(const Triangulation& tri) {
    Skeleton skel(tri);
    bool hasIdeal = false;
    for (int v = 0; v < skel.countVertices() && !hasIdeal; ++v)
        if (isIdealVertex(skel, v)) hasIdeal = true;
    if (!hasIdeal) return homologyH1Raw(skel);
    Triangulation compact = truncateIdealVertices(tri);
    Skeleton skel2(compact);
    return homologyH1Raw(skel2);
}

} // namespace nst
