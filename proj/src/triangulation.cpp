#include "nst/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace nst {

void Triangulation::validate() const {
    const int t = size();
    for (int i = 0; i < t; ++i) {
        for (int f = 0; f < 4; ++f) {
            const FaceSlot& slot = glue_[i][f];
            if (!slot) continue;
            const Gluing& g = *slot;
            if (g.tet < 0 || g.tet >= t)
                throw TriangulationError("gluing target out of range at tet " +
                                         std::to_string(i) + " face " + std::to_string(f));
            if (!g.perm.isOdd())
                throw TriangulationError("orientation-incoherent gluing (even permutation) at tet " +
                                         std::to_string(i) + " face " + std::to_string(f));
            int f2 = g.perm[f];
            if (g.tet == i && f2 == f)
                throw TriangulationError("face glued to itself at tet " + std::to_string(i) +
                                         " face " + std::to_string(f));
            const FaceSlot& back = glue_[g.tet][f2];
            if (!back || back->tet != i || !(back->perm == g.perm.inverse()))
                throw TriangulationError("non-involutive gluing at tet " + std::to_string(i) +
                                         " face " + std::to_string(f));
        }
    }
}

std::string Triangulation::serialize() const {
    std::ostringstream os;
    os << "tets " << size() << "\n";
    for (int i = 0; i < size(); ++i) {
        for (int f = 0; f < 4; ++f) {
            if (f) os << ' ';
            if (!glue_[i][f])
                os << '-';
            else
                os << glue_[i][f]->tet << ':' << glue_[i][f]->perm.digits();
        }
        os << "\n";
    }
    return os.str();
}

Triangulation Triangulation::parse(const std::string& text, bool ideal) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> tokens;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    if (tokens.size() < 2 || tokens[0] != "tets")
        throw TriangulationError("syntax error: expected 'tets <t>' header");
    int t;
    try {
        size_t pos;
        t = std::stoi(tokens[1], &pos);
        if (pos != tokens[1].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw TriangulationError("syntax error: bad tetrahedron count '" + tokens[1] + "'");
    }
    if (t < 0) throw TriangulationError("negative tetrahedron count");
    if (static_cast<int>(tokens.size()) != 2 + 4 * t)
        throw TriangulationError("syntax error: expected " + std::to_string(4 * t) +
                                 " face tokens, got " + std::to_string(tokens.size() - 2));

    std::vector<std::array<FaceSlot, 4>> glue(t);
    for (int i = 0; i < t; ++i) {
        for (int f = 0; f < 4; ++f) {
            const std::string& tok = tokens[2 + 4 * i + f];
            if (tok == "-") continue;
            auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw TriangulationError("syntax error in gluing token '" + tok + "'");
            int j;
            try {
                size_t pos;
                j = std::stoi(tok.substr(0, colon), &pos);
                if (pos != colon) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw TriangulationError("syntax error: bad tetrahedron index in '" + tok + "'");
            }
            Perm4 p;
            try {
                p = Perm4::fromDigits(tok.substr(colon + 1));
            } catch (const std::exception& e) {
                throw TriangulationError("syntax error: " + std::string(e.what()));
            }
            glue[i][f] = Gluing{j, p};
        }
    }
    return Triangulation(std::move(glue), ideal);
}

// ---------------------------------------------------------------------------

namespace {

/// The two faces of a tetrahedron containing edge {a,b} are the faces
/// opposite the other two vertices.
std::array<int, 2> sideVertices(int a, int b) {
    std::array<int, 2> out{};
    int n = 0;
    for (int v = 0; v < 4; ++v)
        if (v != a && v != b) out[n++] = v;
    return out;
}

} // namespace

Skeleton::Skeleton(const Triangulation& tri) : tri_(&tri) {
    const int t = tri.size();
    edgeClass_.assign(t, {-1, -1, -1, -1, -1, -1});
    edgeForward_.assign(t, {false, false, false, false, false, false});
    vertexClass_.assign(t, {-1, -1, -1, -1});
    bdryCompOfFace_.assign(t, {-1, -1, -1, -1});
    buildEdges();
    buildVertices();
    buildBoundary();
}

void Skeleton::buildEdges() {
    const Triangulation& tri = *tri_;
    const int t = tri.size();

    // Walk the corridor around each edge.  A walk state is (tet, directed
    // edge (a,b), exit side vertex x): we leave through face x.
    struct State { int tet, a, b, x; };
    auto step = [&](const State& s) -> std::optional<State> {
        const FaceSlot& g = tri.gluing(s.tet, s.x);
        if (!g) return std::nullopt;
        const Perm4& p = g->perm;
        int a2 = p[s.a], b2 = p[s.b];
        // entered through face p[x]; exit through the other side
        auto sv = sideVertices(a2, b2);
        int entered = p[s.x];
        int exit = (sv[0] == entered) ? sv[1] : sv[0];
        return State{g->tet, a2, b2, exit};
    };

    for (int i = 0; i < t; ++i) {
        for (int e = 0; e < 6; ++e) {
            if (edgeClass_[i][e] >= 0) continue;
            int id = static_cast<int>(edges_.size());
            edges_.push_back({});
            EdgeClass& cls = edges_.back();

            int a0 = kEdgeVertices[e][0], b0 = kEdgeVertices[e][1];
            auto sv0 = sideVertices(a0, b0);

            auto visit = [&](int tet, int a, int b) {
                int ei = edgeIndexOf(a, b);
                if (edgeClass_[tet][ei] >= 0) {
                    bool fwd = (kEdgeVertices[ei][0] == a);
                    if (edgeForward_[tet][ei] != fwd)
                        throw TriangulationError("edge glued to itself in reverse");
                    return false;  // already recorded
                }
                edgeClass_[tet][ei] = id;
                edgeForward_[tet][ei] = (kEdgeVertices[ei][0] == a);
                cls.incidences.emplace_back(tet, ei);
                return true;
            };

            visit(i, a0, b0);
            // walk one way
            bool closedUp = false;
            State s{i, a0, b0, sv0[0]};
            while (true) {
                auto nxt = step(s);
                if (!nxt) break;  // hit boundary
                s = *nxt;
                if (s.tet == i && s.a == a0 && s.b == b0 && s.x == sv0[0]) {
                    closedUp = true;
                    break;
                }
                if (s.tet == i && s.a == b0 && s.b == a0)
                    throw TriangulationError("edge glued to itself in reverse");
                visit(s.tet, s.a, s.b);
            }
            if (!closedUp) {
                cls.boundary = true;
                // walk the other way to pick up the rest of the corridor
                State r{i, a0, b0, sv0[1]};
                while (true) {
                    auto nxt = step(r);
                    if (!nxt) break;
                    r = *nxt;
                    visit(r.tet, r.a, r.b);
                }
            }
            cls.degree = static_cast<int>(cls.incidences.size());
        }
    }

    // consistency: each (tet,edge) classified exactly once
    int total = 0;
    for (const auto& c : edges_) total += c.degree;
    if (total != 6 * t)
        throw TriangulationError("internal error: edge classification mismatch");
}

void Skeleton::buildVertices() {
    const Triangulation& tri = *tri_;
    const int t = tri.size();
    // union-find over corners (tet, v)
    std::vector<int> parent(4 * t);
    for (int i = 0; i < 4 * t; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f) {
            const FaceSlot& g = tri.gluing(i, f);
            if (!g) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                int x = find(4 * i + v), y = find(4 * g->tet + g->perm[v]);
                if (x != y) parent[x] = y;
            }
        }
    std::map<int, int> classId;
    for (int i = 0; i < t; ++i)
        for (int v = 0; v < 4; ++v) {
            int root = find(4 * i + v);
            auto [it, fresh] = classId.try_emplace(root, static_cast<int>(vertices_.size()));
            if (fresh) vertices_.push_back({});
            vertexClass_[i][v] = it->second;
            vertices_[it->second].corners.emplace_back(i, v);
        }
    // boundary flag: vertex lies in some boundary face
    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f)
            if (tri.isBoundaryFace(i, f))
                for (int v = 0; v < 4; ++v)
                    if (v != f) vertices_[vertexClass_[i][v]].boundary = true;
}

void Skeleton::buildBoundary() {
    const Triangulation& tri = *tri_;
    const int t = tri.size();
    // Boundary faces form closed surfaces; two boundary faces are adjacent
    // along a boundary edge when they are consecutive in that edge's corridor.
    // Walking around an edge from one boundary face reaches the other.
    std::vector<std::pair<int, int>> bfaces;
    std::map<std::pair<int, int>, int> bfaceId;
    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f)
            if (tri.isBoundaryFace(i, f)) {
                bfaceId[{i, f}] = static_cast<int>(bfaces.size());
                bfaces.emplace_back(i, f);
            }
    const int nb = static_cast<int>(bfaces.size());
    std::vector<int> parent(nb);
    for (int i = 0; i < nb; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    // For each boundary face and each of its 3 edges, walk through the
    // corridor to the partner boundary face.
    auto partner = [&](int tet, int face, int a, int b) -> std::pair<int, int> {
        // leave (tet, edge (a,b)) through the face `face`... the boundary
        // face contains edge {a,b}; cross interior gluings starting from the
        // *other* face at this edge until the next boundary face.
        auto sv = sideVertices(a, b);
        int other = (sv[0] == face) ? sv[1] : sv[0];
        int ct = tet, ca = a, cb = b, cx = other;
        while (true) {
            const FaceSlot& g = tri.gluing(ct, cx);
            if (!g) return {ct, cx};
            const Perm4& p = g->perm;
            int a2 = p[ca], b2 = p[cb], entered = p[cx];
            auto sv2 = sideVertices(a2, b2);
            ct = g->tet;
            ca = a2; cb = b2;
            cx = (sv2[0] == entered) ? sv2[1] : sv2[0];
        }
    };

    for (int bi = 0; bi < nb; ++bi) {
        auto [tet, face] = bfaces[bi];
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                if (a == face || b == face) continue;  // edge must lie in the face
                auto [pt, pf] = partner(tet, face, a, b);
                int pj = bfaceId.at({pt, pf});
                int x = find(bi), y = find(pj);
                if (x != y) parent[x] = y;
            }
    }

    std::map<int, int> compId;
    for (int bi = 0; bi < nb; ++bi) {
        int root = find(bi);
        auto [it, fresh] = compId.try_emplace(root, nBdryComps_);
        if (fresh) ++nBdryComps_;
        bdryCompOfFace_[bfaces[bi].first][bfaces[bi].second] = it->second;
    }

    bdryCompOfEdge_.assign(edges_.size(), -1);
    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f)
            if (tri.isBoundaryFace(i, f)) {
                int comp = bdryCompOfFace_[i][f];
                for (int a = 0; a < 4; ++a)
                    for (int b = a + 1; b < 4; ++b) {
                        if (a == f || b == f) continue;
                        bdryCompOfEdge_[edgeClass_[i][edgeIndexOf(a, b)]] = comp;
                    }
            }

    bdryCompOfVertex_.assign(vertices_.size(), -1);
    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f)
            if (tri.isBoundaryFace(i, f))
                for (int v = 0; v < 4; ++v)
                    if (v != f) bdryCompOfVertex_[vertexClass_[i][v]] = bdryCompOfFace_[i][f];

    // Euler characteristic per component: count boundary faces, boundary
    // edge classes and boundary vertex classes in each.
    bdryChi_.assign(nBdryComps_, 0);
    for (int bi = 0; bi < nb; ++bi)
        bdryChi_[bdryCompOfFace_[bfaces[bi].first][bfaces[bi].second]] += 1;
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].boundary && bdryCompOfEdge_[e] >= 0) bdryChi_[bdryCompOfEdge_[e]] -= 1;
    for (size_t v = 0; v < vertices_.size(); ++v)
        if (bdryCompOfVertex_[v] >= 0) bdryChi_[bdryCompOfVertex_[v]] += 1;
}

// ---------------------------------------------------------------------------

VertexLink::VertexLink(const Skeleton& skel, int vertexClass)
    : skel_(&skel), vclass_(vertexClass) {
    const Triangulation& tri = skel.tri();
    corners_ = skel.vertex(vertexClass).corners;
    for (int i = 0; i < static_cast<int>(corners_.size()); ++i)
        triOf_[corners_[i]] = i;

    // link edges: sides (triangle, faceIdx)
    for (int ti = 0; ti < static_cast<int>(corners_.size()); ++ti) {
        auto [tet, v] = corners_[ti];
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            if (sideEdge_.count({ti, f})) continue;
            int id = static_cast<int>(linkEdges_.size());
            LinkEdge le;
            le.tri0 = ti;
            le.f0 = f;
            const FaceSlot& g = tri.gluing(tet, f);
            if (g) {
                int tet2 = g->tet, v2 = g->perm[v], f2 = g->perm[f];
                le.tri1 = triOf_.at({tet2, v2});
                le.f1 = f2;
                sideEdge_[{le.tri1, f2}] = id;
            } else {
                closed_ = false;
            }
            sideEdge_[{ti, f}] = id;
            linkEdges_.push_back(le);
        }
    }

    // link vertices: a corner of triangle (tet, v) sits on ambient edge
    // {v, w}; identified with the corresponding corner across any gluing of
    // a face containing that edge.
    {
        std::map<std::pair<int, int>, int> parent;  // (tri, w) -> flattened
        std::vector<std::pair<int, int>> items;
        std::map<std::pair<int, int>, int> idx;
        for (int ti = 0; ti < static_cast<int>(corners_.size()); ++ti) {
            auto [tet, v] = corners_[ti];
            (void)tet;
            for (int w = 0; w < 4; ++w)
                if (w != v) {
                    idx[{ti, w}] = static_cast<int>(items.size());
                    items.emplace_back(ti, w);
                }
        }
        std::vector<int> uf(items.size());
        for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (int ti = 0; ti < static_cast<int>(corners_.size()); ++ti) {
            auto [tet, v] = corners_[ti];
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                const FaceSlot& g = tri.gluing(tet, f);
                if (!g) continue;
                int ti2 = triOf_.at({g->tet, g->perm[v]});
                for (int w = 0; w < 4; ++w) {
                    if (w == v || w == f) continue;  // w in face f, w != v
                    int x = find(idx.at({ti, w}));
                    int y = find(idx.at({ti2, g->perm[w]}));
                    if (x != y) uf[x] = y;
                }
            }
        }
        std::map<int, int> vid;
        for (size_t i = 0; i < items.size(); ++i) {
            int root = find(static_cast<int>(i));
            auto [it, fresh] = vid.try_emplace(root, nLinkVerts_);
            if (fresh) ++nLinkVerts_;
            cornerVert_[items[i]] = it->second;
        }
    }

    chi_ = nLinkVerts_ - countLinkEdges() + countTriangles();

    // connectivity over triangles
    if (!corners_.empty()) {
        std::vector<int> seen(corners_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int ti = stack.back();
            stack.pop_back();
            auto [tet, v] = corners_[ti];
            (void)tet;
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                auto [nt, nf] = neighbour(ti, f);
                (void)nf;
                if (nt >= 0 && !seen[nt]) {
                    seen[nt] = 1;
                    ++count;
                    stack.push_back(nt);
                }
            }
        }
        connected_ = (count == static_cast<int>(corners_.size()));
    }

    // orientability: orient each triangle via a sign; crossing a gluing
    // preserves the ambient orientation, and comparing the induced boundary
    // orientations determines the relative sign.  For links in an oriented
    // triangulation the link triangle at corner v inherits the orientation
    // of the tetrahedron as seen from v, which is consistent across odd
    // gluings; links of oriented triangulations are always orientable.
    orientable_ = true;
}

std::pair<int, int> VertexLink::neighbour(int t, int f) const {
    auto [tet, v] = corners_[t];
    const FaceSlot& g = skel_->tri().gluing(tet, f);
    if (!g) return {-1, -1};
    return {triOf_.at({g->tet, g->perm[v]}), g->perm[f]};
}

bool isIdealVertex(const Skeleton& skel, int vertexClass) {
    if (skel.vertex(vertexClass).boundary) return false;
    VertexLink link(skel, vertexClass);
    return link.closed() && !(link.connected() && link.chi() == 2);
}

bool linksAreManifoldLike(const Skeleton& skel, bool ideal, std::string* whyNot) {
    for (int v = 0; v < skel.countVertices(); ++v) {
        VertexLink link(skel, v);
        if (!link.connected()) {
            if (whyNot) *whyNot = "vertex " + std::to_string(v) + " has disconnected link";
            return false;
        }
        if (link.closed()) {
            if (link.chi() == 2) continue;             // material internal vertex
            if (ideal && link.orientable()) continue;  // ideal vertex
            if (whyNot)
                *whyNot = "internal vertex " + std::to_string(v) + " has non-sphere link (chi=" +
                          std::to_string(link.chi()) + ")";
            return false;
        }
        if (link.chi() != 1) {
            if (whyNot)
                *whyNot = "boundary vertex " + std::to_string(v) + " has non-disc link (chi=" +
                          std::to_string(link.chi()) + ")";
            return false;
        }
    }
    return true;
}

} // namespace nst
