#include "nst/truncate.hpp"

#include "nst/builder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nst {

namespace {

// Local vertex tags inside one subdivided tetrahedron.
constexpr int kApex = 0;
int vtxTag(int v) { return 1 + v; }
int cutTag(int v, int w) { return 5 + 4 * v + w; }  // point on edge vw near v
bool isCutTag(int t) { return t >= 5; }
int cutNear(int t) { return (t - 5) / 4; }
int cutFar(int t) { return (t - 5) % 4; }

// Is the tag contained in face g of the model tetrahedron?
bool tagInFace(int tag, int g) {
    if (tag == kApex) return false;
    if (!isCutTag(tag)) return tag - 1 != g;
    return cutNear(tag) != g && cutFar(tag) != g;
}

// Map a tag through a face-gluing vertex permutation.
int mapTag(int tag, const Perm4& p) {
    if (tag == kApex) return kApex;
    if (!isCutTag(tag)) return vtxTag(p[tag - 1]);
    return cutTag(p[cutNear(tag)], p[cutFar(tag)]);
}

struct Tri3 {
    std::array<int, 3> v;  // tags, orientation-free
};

// Hexagon fan triangulation of the central region of face g, from the given
// root corner, over the cyclic order of the six cut points.
std::vector<Tri3> hexFan(int g, int rootPos) {
    int u[3];
    int n = 0;
    for (int v = 0; v < 4; ++v)
        if (v != g) u[n++] = v;
    std::array<int, 6> cyc{cutTag(u[0], u[1]), cutTag(u[1], u[0]), cutTag(u[1], u[2]),
                           cutTag(u[2], u[1]), cutTag(u[2], u[0]), cutTag(u[0], u[2])};
    std::vector<Tri3> out;
    for (int k = 1; k <= 4; ++k)
        out.push_back(Tri3{{cyc[rootPos], cyc[(rootPos + k) % 6], cyc[(rootPos + k + 1) % 6]}});
    return out;
}

} // namespace

Triangulation truncateIdealVertices(const Triangulation& tri,
                                    std::vector<std::pair<int, int>>* idealBoundaryFaces) {
    Skeleton skel(tri);
    std::vector<bool> idealClass(skel.countVertices());
    bool any = false;
    for (int v = 0; v < skel.countVertices(); ++v) {
        idealClass[v] = isIdealVertex(skel, v);
        any = any || idealClass[v];
    }
    if (!any)
        throw std::invalid_argument("truncate: input is already compact (no ideal vertices)");

    const int t = tri.size();
    ComplexBuilder builder;

    // Fan triangle lists per (tet, face); canonical sides fan from cyclic
    // position 0, partners inherit the subdivision through the gluing.
    std::vector<std::array<std::vector<Tri3>, 4>> fans(t);
    for (int i = 0; i < t; ++i)
        for (int g = 0; g < 4; ++g) {
            const FaceSlot& gl = tri.gluing(i, g);
            bool canonical = true;
            if (gl) {
                int j = gl->tet, g2 = gl->perm[g];
                canonical = (i < j) || (i == j && g < g2);
            }
            if (!canonical) continue;
            fans[i][g] = hexFan(g, 0);
            if (gl) {
                int j = gl->tet, g2 = gl->perm[g];
                std::vector<Tri3> mapped;
                for (const Tri3& f : fans[i][g])
                    mapped.push_back(Tri3{{mapTag(f.v[0], gl->perm), mapTag(f.v[1], gl->perm),
                                           mapTag(f.v[2], gl->perm)}});
                fans[j][g2] = std::move(mapped);
            }
        }

    // Create tetrahedra, remembering tags.
    struct NewTet {
        int global;
        std::array<int, 4> tags;
    };
    std::vector<std::vector<NewTet>> tets(t);

    auto others = [](int v) {
        std::array<int, 3> o{};
        int n = 0;
        for (int w = 0; w < 4; ++w)
            if (w != v) o[n++] = w;
        return o;
    };

    for (int i = 0; i < t; ++i) {
        for (int v = 0; v < 4; ++v) {  // cut cones
            auto o = others(v);
            NewTet nt;
            nt.global = builder.addTet();
            nt.tags = {kApex, cutTag(v, o[0]), cutTag(v, o[1]), cutTag(v, o[2])};
            tets[i].push_back(nt);
        }
        for (int g = 0; g < 4; ++g)  // hexagon fan cones
            for (const Tri3& f : fans[i][g]) {
                NewTet nt;
                nt.global = builder.addTet();
                nt.tags = {kApex, f.v[0], f.v[1], f.v[2]};
                tets[i].push_back(nt);
            }
        for (int v = 0; v < 4; ++v) {  // material corner pieces
            if (idealClass[skel.vertexClassOf(i, v)]) continue;
            auto o = others(v);
            NewTet nt;
            nt.global = builder.addTet();
            nt.tags = {vtxTag(v), cutTag(v, o[0]), cutTag(v, o[1]), cutTag(v, o[2])};
            tets[i].push_back(nt);
        }
    }

    // Face registry per source tetrahedron.
    struct FaceRef {
        int global, slot;
        std::array<int, 3> tags;  // in slot order (slots != slot)
    };
    auto faceTags = [](const NewTet& nt, int slot) {
        std::array<int, 3> out{};
        int n = 0;
        for (int s = 0; s < 4; ++s)
            if (s != slot) out[n++] = nt.tags[s];
        return out;
    };
    auto sortedKey = [](std::array<int, 3> a) {
        std::sort(a.begin(), a.end());
        return a;
    };

    std::vector<std::map<std::array<int, 3>, std::vector<FaceRef>>> crossReg(t);
    std::vector<std::pair<int, int>> idealFacesRaw;  // (global, slot)

    auto glueRefs = [&](const FaceRef& a, const FaceRef& b,
                        const std::map<int, int>& tagMap) {
        // build the vertex permutation from slot correspondence
        std::array<int, 4> img{-1, -1, -1, -1};
        int slotsA[3], n = 0;
        for (int s = 0; s < 4; ++s)
            if (s != a.slot) slotsA[n++] = s;
        for (int k = 0; k < 3; ++k) {
            int tagA = a.tags[k];
            int mapped = tagMap.empty() ? tagA : tagMap.at(tagA);
            // find mapped tag among b's face tags
            int slotsB[3], m = 0;
            for (int s = 0; s < 4; ++s)
                if (s != b.slot) slotsB[m++] = s;
            int found = -1;
            for (int k2 = 0; k2 < 3; ++k2)
                if (b.tags[k2] == mapped) found = slotsB[k2];
            if (found < 0) throw std::logic_error("truncate: tag mismatch in gluing");
            img[slotsA[k]] = found;
        }
        img[a.slot] = b.slot;
        builder.glue(a.global, a.slot, b.global, Perm4(img[0], img[1], img[2], img[3]));
    };

    for (int i = 0; i < t; ++i) {
        std::map<std::array<int, 3>, std::vector<FaceRef>> reg;
        for (const NewTet& nt : tets[i])
            for (int slot = 0; slot < 4; ++slot) {
                auto tagsInOrder = faceTags(nt, slot);
                FaceRef ref{nt.global, slot, {tagsInOrder[0], tagsInOrder[1], tagsInOrder[2]}};
                reg[sortedKey(tagsInOrder)].push_back(ref);
            }
        for (auto& [key, refs] : reg) {
            if (refs.size() == 2) {
                glueRefs(refs[0], refs[1], {});
                continue;
            }
            if (refs.size() != 1) throw std::logic_error("truncate: face multiplicity");
            const FaceRef& ref = refs[0];
            // Each unmatched face either lies in one original face of the
            // tetrahedron (cross or boundary) or is the cut triangle of an
            // ideal corner.
            int host = -1;
            for (int g = 0; g < 4 && host < 0; ++g)
                if (tagInFace(key[0], g) && tagInFace(key[1], g) && tagInFace(key[2], g))
                    host = g;
            if (host < 0)
                idealFacesRaw.emplace_back(ref.global, ref.slot);
            else if (!tri.isBoundaryFace(i, host))
                crossReg[i][key].push_back(ref);
        }
    }

    // Cross gluings through the original face pairings.
    for (int i = 0; i < t; ++i)
        for (int g = 0; g < 4; ++g) {
            const FaceSlot& gl = tri.gluing(i, g);
            if (!gl) continue;
            int j = gl->tet, g2 = gl->perm[g];
            if (!((i < j) || (i == j && g < g2))) continue;
            std::map<int, int> tagMap;
            for (int tag = 1; tag < 21; ++tag) {
                if (!isCutTag(tag) && tag <= 4) {
                    if (tagInFace(tag, g)) tagMap[tag] = mapTag(tag, gl->perm);
                } else if (isCutTag(tag) && cutNear(tag) != cutFar(tag)) {
                    if (tagInFace(tag, g)) tagMap[tag] = mapTag(tag, gl->perm);
                }
            }
            for (auto& [key, refs] : crossReg[i]) {
                if (!(tagInFace(key[0], g) && tagInFace(key[1], g) && tagInFace(key[2], g)))
                    continue;
                for (const FaceRef& ra : refs) {
                    std::array<int, 3> mappedKey{tagMap.at(key[0]), tagMap.at(key[1]),
                                                 tagMap.at(key[2])};
                    std::sort(mappedKey.begin(), mappedKey.end());
                    auto it = crossReg[j].find(mappedKey);
                    if (it == crossReg[j].end())
                        throw std::logic_error("truncate: missing cross partner");
                    // find the partner on face g2
                    for (const FaceRef& rb : it->second) {
                        if (builder.isGlued(ra.global, ra.slot)) break;
                        if (builder.isGlued(rb.global, rb.slot)) continue;
                        bool ok = true;
                        for (int k = 0; k < 3 && ok; ++k)
                            ok = tagInFace(rb.tags[k], g2);
                        if (!ok) continue;
                        glueRefs(ra, rb, tagMap);
                        break;
                    }
                }
            }
        }

    std::vector<Perm4> rho;
    Triangulation out = builder.build(false, &rho);
    if (idealBoundaryFaces) {
        idealBoundaryFaces->clear();
        for (auto [g, slot] : idealFacesRaw)
            idealBoundaryFaces->emplace_back(g, rho[g][slot]);
    }
    return out;
}

} // namespace nst
