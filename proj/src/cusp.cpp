#include "nst/cusp.hpp"

#include "nst/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nst {

namespace {

struct StepImage {
    int toTri, toFace;  // triangle entered, across its side in this face
    int fromQuad;       // quad index (3t layout) labelling the exit side
    int toQuad;         // quad index labelling the entry side
};

StepImage follow(const VertexLink& link, int ti, int f) {
    const Triangulation& tri = link.skeleton().tri();
    auto [tet, v] = link.corners()[ti];
    if (f == v || f < 0 || f > 3)
        throw std::invalid_argument("cusp curve step leaves across an invalid face");
    const FaceSlot& g = tri.gluing(tet, f);
    if (!g)
        throw std::invalid_argument("cusp curve crosses a boundary side of the link");
    int tet2 = g->tet, v2 = g->perm[v], f2 = g->perm[f];
    StepImage out;
    out.toTri = link.triangleAt(tet2, v2);
    out.toFace = f2;
    out.fromQuad = quadIndexQ(tet, quadTypeOfPair(v, f));
    out.toQuad = quadIndexQ(tet2, quadTypeOfPair(v2, f2));
    return out;
}

} // namespace

void validateCurve(const VertexLink& link, const CuspCurve& c) {
    if (c.steps.empty())
        throw std::invalid_argument("cusp curve must have at least one step");
    for (size_t i = 0; i < c.steps.size(); ++i) {
        auto [ti, f] = c.steps[i];
        if (ti < 0 || ti >= link.countTriangles())
            throw std::invalid_argument("cusp curve step at unknown link triangle");
        StepImage img = follow(link, ti, f);
        int nextTri = c.steps[(i + 1) % c.steps.size()].first;
        if (img.toTri != nextTri)
            throw std::invalid_argument("cusp curve is not a closed dual walk");
    }
}

BoundaryFunctional boundaryFunctional(const VertexLink& link, const MatchingSystem& qMatching,
                                      const CuspCurve& c) {
    validateCurve(link, c);
    const int t = link.skeleton().tri().size();
    BoundaryFunctional out;
    out.curve = c;
    out.raw = IntVec::Zero(3 * t);
    for (auto [ti, f] : c.steps) {
        StepImage img = follow(link, ti, f);
        out.raw[img.fromQuad] -= 1;
        out.raw[img.toQuad] += 1;
    }
    out.reduced = reduceModuloRows(qMatching.rows, out.raw);
    return out;
}

CuspCurve reversed(const VertexLink& link, const CuspCurve& c) {
    validateCurve(link, c);
    CuspCurve r;
    r.vertexClass = c.vertexClass;
    r.name = c.name.empty() ? "" : c.name + "-rev";
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
        StepImage img = follow(link, it->first, it->second);
        r.steps.emplace_back(img.toTri, img.toFace);
    }
    return r;
}

CuspCurve elementaryLoop(const VertexLink& link, int linkVertex) {
    // locate a corner carrying this link vertex
    int ti0 = -1, w0 = -1;
    for (int ti = 0; ti < link.countTriangles() && ti0 < 0; ++ti) {
        auto [tet, v] = link.corners()[ti];
        (void)tet;
        for (int w = 0; w < 4; ++w) {
            if (w == v) continue;
            if (link.linkVertexAt(ti, w) == linkVertex) {
                ti0 = ti;
                w0 = w;
                break;
            }
        }
    }
    if (ti0 < 0) throw std::invalid_argument("unknown link vertex");

    const Triangulation& tri = link.skeleton().tri();
    CuspCurve c;
    c.vertexClass = link.vertexClass();
    c.name = "loop" + std::to_string(linkVertex);

    auto firstExit = [&](int ti, int w) {
        auto [tet, v] = link.corners()[ti];
        (void)tet;
        for (int f = 0; f < 4; ++f)
            if (f != v && f != w) return f;
        return -1;
    };

    int ti = ti0, w = w0, exit = firstExit(ti0, w0);
    const std::tuple<int, int, int> start{ti, w, exit};
    do {
        c.steps.emplace_back(ti, exit);
        auto [tet, v] = link.corners()[ti];
        const FaceSlot& g = tri.gluing(tet, exit);
        if (!g)
            throw std::invalid_argument("elementary loop around a boundary link vertex");
        int v2 = g->perm[v], w2 = g->perm[w], entered = g->perm[exit];
        ti = link.triangleAt(g->tet, v2);
        w = w2;
        exit = -1;
        for (int f = 0; f < 4; ++f)
            if (f != v2 && f != w2 && f != entered) exit = f;
    } while (std::tuple<int, int, int>{ti, w, exit} != start);
    return c;
}

// ---------------------------------------------------------------------------
// Canonical homology basis of a torus link

namespace {

/// Z-basis of the integer kernel lattice of A (columns).
IntMat integerKernelLattice(const IntMat& a) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    IntMat m = a;
    IntMat right = IntMat::Identity(cols, cols);
    Eigen::Index r = 0;
    const Eigen::Index n = std::min(rows, cols);
    while (r < n) {
        Eigen::Index pi = -1, pj = -1;
        Integer best = 0;
        bool found = false;
        for (Eigen::Index i = r; i < rows; ++i)
            for (Eigen::Index j = r; j < cols; ++j) {
                if (m(i, j) == 0) continue;
                Integer v = boost::multiprecision::abs(m(i, j));
                if (!found || v < best) { best = v; pi = i; pj = j; found = true; }
            }
        if (!found) break;
        m.row(pi).swap(m.row(r));
        m.col(pj).swap(m.col(r)); right.col(pj).swap(right.col(r));
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (Eigen::Index i = r + 1; i < rows; ++i) {
                if (m(i, r) == 0) continue;
                Integer q = m(i, r) / m(r, r);
                if (q != 0) m.row(i) -= (m.row(r) * q).eval();
                if (m(i, r) != 0) { m.row(i).swap(m.row(r)); dirty = true; }
            }
            for (Eigen::Index j = r + 1; j < cols; ++j) {
                if (m(r, j) == 0) continue;
                Integer q = m(r, j) / m(r, r);
                if (q != 0) {
                    m.col(j) -= (m.col(r) * q).eval();
                    right.col(j) -= (right.col(r) * q).eval();
                }
                if (m(r, j) != 0) {
                    m.col(j).swap(m.col(r)); right.col(j).swap(right.col(r));
                    dirty = true;
                }
            }
        }
        ++r;
    }
    IntMat kernel(cols, cols - r);
    for (Eigen::Index j = r; j < cols; ++j) kernel.col(j - r) = right.col(j);
    return kernel;
}

} // namespace

std::vector<CuspCurve> boundaryBasis(const VertexLink& link, const MatchingSystem& qMatching) {
    if (!link.isTorus())
        throw std::invalid_argument("boundary basis requires a torus link");

    const int T = link.countTriangles();
    const int E = link.countLinkEdges();
    const int V = link.countLinkVertices();

    // spanning tree of the dual graph, BFS in canonical order
    std::vector<int> parentTri(T, -1), parentFace(T, -1);
    std::vector<int> seen(T, 0);
    std::vector<int> order{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int ti = order[qi];
        auto [tet, v] = link.corners()[ti];
        (void)tet;
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            StepImage img = follow(link, ti, f);
            if (!seen[img.toTri]) {
                seen[img.toTri] = 1;
                parentTri[img.toTri] = ti;
                parentFace[img.toTri] = f;  // step from parent into child
                order.push_back(img.toTri);
            }
        }
    }

    auto pathFromRoot = [&](int target) {
        std::vector<std::pair<int, int>> steps;  // root -> target
        int cur = target;
        while (cur != 0) {
            steps.emplace_back(parentTri[cur], parentFace[cur]);
            cur = parentTri[cur];
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
    };
    auto reversePath = [&](const std::vector<std::pair<int, int>>& steps) {
        std::vector<std::pair<int, int>> out;
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            StepImage img = follow(link, it->first, it->second);
            out.emplace_back(img.toTri, img.toFace);
        }
        return out;
    };

    // fundamental cycles from non-tree edges, as based loops at triangle 0
    std::vector<std::vector<std::pair<int, int>>> cycles;
    std::vector<char> treeEdge(E, 0);
    for (int ti = 1; ti < T; ++ti)
        treeEdge[link.linkEdgeOf(parentTri[ti], parentFace[ti])] = 1;

    for (int e = 0; e < E; ++e) {
        if (treeEdge[e]) continue;
        const auto& le = link.linkEdge(e);
        std::vector<std::pair<int, int>> walk = pathFromRoot(le.tri0);
        walk.emplace_back(le.tri0, le.f0);
        StepImage img = follow(link, le.tri0, le.f0);
        std::vector<std::pair<int, int>> back = reversePath(pathFromRoot(img.toTri));
        walk.insert(walk.end(), back.begin(), back.end());
        cycles.push_back(std::move(walk));
    }

    // chain complex of the link surface
    IntMat d1 = IntMat::Zero(V, E);
    std::vector<std::array<int, 2>> tailFar(E);  // local far-endpoints of the oriented edge
    for (int e = 0; e < E; ++e) {
        const auto& le = link.linkEdge(e);
        auto [tet0, v0] = link.corners()[le.tri0];
        (void)tet0;
        int a = -1, b = -1;
        for (int w = 0; w < 4; ++w) {
            if (w == v0 || w == le.f0) continue;
            (a < 0 ? a : b) = w;
        }
        // oriented from corner a to corner b (a < b)
        tailFar[e] = {a, b};
        d1(link.linkVertexAt(le.tri0, a), e) -= 1;
        d1(link.linkVertexAt(le.tri0, b), e) += 1;
    }
    auto sideSign = [&](int ti, int f, int fromW) {
        // +1 when traversing side (ti,f) starting at local corner fromW agrees
        // with the edge's orientation
        int e = link.linkEdgeOf(ti, f);
        const auto& le = link.linkEdge(e);
        if (ti == le.tri0 && f == le.f0) return fromW == tailFar[e][0] ? 1 : -1;
        // partner side: transport the tail through the gluing
        const Triangulation& tri = link.skeleton().tri();
        auto [tet0, v0] = link.corners()[le.tri0];
        (void)v0;
        const Perm4& p = tri.gluing(tet0, le.f0)->perm;
        return fromW == p[tailFar[e][0]] ? 1 : -1;
    };

    IntMat d2 = IntMat::Zero(E, T);
    for (int ti = 0; ti < T; ++ti) {
        auto [tet, v] = link.corners()[ti];
        (void)tet;
        int ws[3];
        int n = 0;
        for (int w = 0; w < 4; ++w)
            if (w != v) ws[n++] = w;
        // boundary [w0w1] + [w1w2] - [w0w2]; side joining wi,wj is the face
        // excluding them
        struct Seg { int from, to; };
        const Seg segs[3] = {{ws[0], ws[1]}, {ws[1], ws[2]}, {ws[0], ws[2]}};
        const int segSign[3] = {1, 1, -1};
        for (int k = 0; k < 3; ++k) {
            int f = -1;
            for (int w = 0; w < 4; ++w)
                if (w != v && w != segs[k].from && w != segs[k].to) f = w;
            int e = link.linkEdgeOf(ti, f);
            d2(e, ti) += segSign[k] * sideSign(ti, f, segs[k].from);
        }
    }

    // H1 coordinates: kernel lattice of d1, then quotient by im d2
    IntMat K = integerKernelLattice(d1);
    const Eigen::Index k = K.cols();
    IntMat M(k, T);
    for (int ti = 0; ti < T; ++ti) {
        IntVec col = d2.col(ti), z;
        if (!solveIntegerSystem(K, col, z))
            throw std::logic_error("boundary basis: d2 image not in kernel lattice");
        M.col(ti) = z;
    }
    // Smith with left transform to read off the free quotient coordinates
    IntMat m = M;
    IntMat left = IntMat::Identity(k, k);
    Eigen::Index r = 0;
    const Eigen::Index lim = std::min(m.rows(), m.cols());
    while (r < lim) {
        Eigen::Index pi = -1, pj = -1;
        Integer best = 0;
        bool found = false;
        for (Eigen::Index i = r; i < m.rows(); ++i)
            for (Eigen::Index j = r; j < m.cols(); ++j) {
                if (m(i, j) == 0) continue;
                Integer vv = boost::multiprecision::abs(m(i, j));
                if (!found || vv < best) { best = vv; pi = i; pj = j; found = true; }
            }
        if (!found) break;
        m.row(pi).swap(m.row(r)); left.row(pi).swap(left.row(r));
        m.col(pj).swap(m.col(r));
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
                if (m(i, r) == 0) continue;
                Integer q = m(i, r) / m(r, r);
                if (q != 0) {
                    m.row(i) -= (m.row(r) * q).eval();
                    left.row(i) -= (left.row(r) * q).eval();
                }
                if (m(i, r) != 0) {
                    m.row(i).swap(m.row(r)); left.row(i).swap(left.row(r));
                    dirty = true;
                }
            }
            for (Eigen::Index j = r + 1; j < m.cols(); ++j) {
                if (m(r, j) == 0) continue;
                Integer q = m(r, j) / m(r, r);
                if (q != 0) m.col(j) -= (m.col(r) * q).eval();
                if (m(r, j) != 0) { m.col(j).swap(m.col(r)); dirty = true; }
            }
        }
        if (boost::multiprecision::abs(m(r, r)) != 1)
            throw std::logic_error("boundary basis: torus link has torsion in H1");
        ++r;
    }
    if (k - r != 2)
        throw std::logic_error("boundary basis: link H1 rank is not 2");

    // H1 coordinates of an edge-chain: kernel coords then last two rows of
    // the left transform
    auto h1Coords = [&](const IntVec& chain) {
        IntVec z;
        if (!solveIntegerSystem(K, chain, z))
            throw std::logic_error("boundary basis: cycle not in kernel lattice");
        IntVec u = left * z;
        IntVec out(2);
        out[0] = u[k - 2];
        out[1] = u[k - 1];
        return out;
    };

    auto chainOf = [&](const std::vector<std::pair<int, int>>& walk) {
        // homologous simplicial chain: inside each triangle connect the
        // anchor endpoints of the entry and exit edges
        IntVec chain = IntVec::Zero(E);
        const int n = static_cast<int>(walk.size());
        for (int s = 0; s < n; ++s) {
            auto [ti, f] = walk[s];
            StepImage img = follow(link, ti, f);
            // crossing contributes nothing by itself; the in-triangle path of
            // the *next* triangle runs from the entry edge anchor to the exit
            // edge anchor
            auto [tiN, fN] = walk[(s + 1) % n];
            if (tiN != img.toTri)
                throw std::invalid_argument("walk is not chained");
            int entryEdge = link.linkEdgeOf(img.toTri, img.toFace);
            int exitEdge = link.linkEdgeOf(tiN, fN);
            // anchor of an edge: the link vertex at the tail
            auto anchorLocal = [&](int tri, int face) {
                int e = link.linkEdgeOf(tri, face);
                const auto& le = link.linkEdge(e);
                if (tri == le.tri0 && face == le.f0) return tailFar[e][0];
                const Perm4& p =
                    link.skeleton().tri().gluing(link.corners()[le.tri0].first, le.f0)->perm;
                return p[tailFar[e][0]];
            };
            int fromW = anchorLocal(img.toTri, img.toFace);
            int toW = anchorLocal(tiN, fN);
            if (fromW == toW) continue;
            if (entryEdge == exitEdge) continue;
            // the side of tiN joining corners fromW and toW
            auto [tetN, vN] = link.corners()[tiN];
            (void)tetN;
            int side = -1;
            for (int w = 0; w < 4; ++w)
                if (w != vN && w != fromW && w != toW) side = w;
            int e = link.linkEdgeOf(tiN, side);
            chain[e] += sideSign(tiN, side, fromW);
        }
        return chain;
    };

    // coordinates of all fundamental cycles
    IntMat C(static_cast<Eigen::Index>(cycles.size()), 2);
    for (size_t i = 0; i < cycles.size(); ++i) {
        IntVec h = h1Coords(chainOf(cycles[i]));
        C(static_cast<Eigen::Index>(i), 0) = h[0];
        C(static_cast<Eigen::Index>(i), 1) = h[1];
    }

    // integer combinations hitting (1,0) and (0,1)
    std::vector<CuspCurve> out;
    for (int target = 0; target < 2; ++target) {
        IntVec rhs(2);
        rhs[0] = target == 0 ? 1 : 0;
        rhs[1] = target == 0 ? 0 : 1;
        IntVec alpha;
        if (!solveIntegerSystem(C.transpose(), rhs, alpha))
            throw std::logic_error("boundary basis: dual cycles do not span H1");
        CuspCurve c;
        c.vertexClass = link.vertexClass();
        c.name = target == 0 ? "b0" : "b1";
        for (Eigen::Index i = 0; i < alpha.size(); ++i) {
            Integer n = alpha[i];
            if (n == 0) continue;
            std::vector<std::pair<int, int>> loop = cycles[static_cast<size_t>(i)];
            if (n < 0) {
                // reverse the based loop
                std::vector<std::pair<int, int>> rev;
                for (auto it = loop.rbegin(); it != loop.rend(); ++it) {
                    StepImage img = follow(link, it->first, it->second);
                    rev.emplace_back(img.toTri, img.toFace);
                }
                loop = rev;
                n = -n;
            }
            for (Integer rep = 0; rep < n; ++rep)
                c.steps.insert(c.steps.end(), loop.begin(), loop.end());
        }
        if (c.steps.empty())
            throw std::logic_error("boundary basis: empty basis curve");
        validateCurve(link, c);
        (void)qMatching;
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace nst
