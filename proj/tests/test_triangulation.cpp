#include "doctest.h"

#include "nst/triangulation.hpp"

using namespace nst;

TEST_CASE("free tetrahedron skeleton") {
    Triangulation tri = Triangulation::parse("tets 1\n- - - -\n", false);
    CHECK(tri.size() == 1);
    Skeleton skel(tri);
    CHECK(skel.countEdges() == 6);
    CHECK(skel.countVertices() == 4);
    for (int e = 0; e < 6; ++e) {
        CHECK(skel.edge(e).boundary);
        CHECK(skel.edge(e).degree == 1);
    }
    CHECK(skel.countBoundaryComponents() == 1);
    CHECK(skel.boundaryChi()[0] == 2);

    VertexLink link(skel, 0);
    CHECK(link.countTriangles() == 1);
    CHECK(link.isDisc());
}

TEST_CASE("two tetrahedra glued along one face") {
    Triangulation tri = Triangulation::parse("tets 2\n1:0132 - - -\n0:0132 - - -\n", false);
    Skeleton skel(tri);
    CHECK(skel.countEdges() == 9);  // 3 shared + 6 outer
    CHECK(tri.size() == 2);
}

TEST_CASE("involution violations are rejected") {
    // (0,0) -> (1, perm) but (1, perm(0)) -> (0, wrong perm)
    std::vector<std::array<FaceSlot, 4>> glue(2);
    glue[0][0] = Gluing{1, Perm4(0, 1, 3, 2)};
    glue[1][0] = Gluing{0, Perm4(0, 2, 1, 3)};
    CHECK_THROWS_AS(Triangulation(std::move(glue), false), TriangulationError);
}

TEST_CASE("even permutations are rejected") {
    std::vector<std::array<FaceSlot, 4>> glue(2);
    glue[0][0] = Gluing{1, Perm4(0, 1, 2, 3)};
    glue[1][0] = Gluing{0, Perm4(0, 1, 2, 3)};
    CHECK_THROWS_WITH_AS(Triangulation(std::move(glue), false),
                         doctest::Contains("orientation"), TriangulationError);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Triangulation::parse("tets x\n", false), TriangulationError);
    CHECK_THROWS_AS(Triangulation::parse("tets 1\n- -\n", false), TriangulationError);
    CHECK_THROWS_AS(Triangulation::parse("tets 1\n2:0132 - - -\n", false), TriangulationError);
    CHECK_THROWS_AS(Triangulation::parse("tets 1\n- - - 0:0110\n", false), TriangulationError);
}

TEST_CASE("serialize round trip with comments") {
    std::string text = "# a comment\ntets 1\n- - - -  # trailing\n";
    Triangulation tri = Triangulation::parse(text, false);
    Triangulation again = Triangulation::parse(tri.serialize(), false);
    CHECK(tri == again);
}
