#include <doctest.h>

#include <algorithm>
#include <set>

#include "dpcolor/plane_graph.hpp"
#include "fixtures.hpp"

using namespace dpc;
using namespace dpc::testing;

TEST_CASE("triangle rotations build the smallest simple cycle") {
    PlaneGraph g = PlaneGraph::build(3, {{1, 2}, {2, 0}, {0, 1}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    g.trace_faces();
    CHECK(g.face_count() == 2);
}

TEST_CASE("build rejects malformed rotation systems") {
    CHECK_THROWS_WITH_AS(PlaneGraph::build(3, {{1, 2, 1}, {0, 2, 0}, {0, 1}}), doctest::Contains("ParallelEdge"),
                         Error);
    CHECK_THROWS_WITH_AS(PlaneGraph::build(2, {{0, 1}, {0}}), doctest::Contains("LoopEdge"), Error);
    CHECK_THROWS_WITH_AS(PlaneGraph::build(3, {{1, 2}, {0}, {}}), doctest::Contains("AsymmetricAdjacency"),
                         Error);
}

TEST_CASE("K4 planar embedding: 4 vertices, 6 edges, 4 triangle faces") {
    PlaneGraph g = k4_graph();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.face_count() == 4);
    for (const Face& f : g.faces()) CHECK(f.degree() == 3);
}

TEST_CASE("cube embedding: 6 quadrilateral faces") {
    PlaneGraph g = cube_graph();
    CHECK(g.face_count() == 6);
    for (const Face& f : g.faces()) CHECK(f.degree() == 4);
}

TEST_CASE("icosahedron embedding: 20 triangle faces") {
    PlaneGraph g = icosahedron_graph();
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 30);
    CHECK(g.face_count() == 20);
}

TEST_CASE("a single edge traces one face of degree 2") {
    PlaneGraph g = PlaneGraph::build(2, {{1}, {0}});
    g.trace_faces();
    CHECK(g.face_count() == 1);
    CHECK(g.face(0).degree() == 2);
}

TEST_CASE("disconnected graphs are rejected at trace time") {
    PlaneGraph g = PlaneGraph::build(4, {{1}, {0}, {3}, {2}});
    CHECK_THROWS_WITH_AS(g.trace_faces(), doctest::Contains("Disconnected"), Error);
}

TEST_CASE("outer face designation") {
    SUBCASE("K4: any face leaves one internal vertex") {
        PlaneGraph g = k4_graph();
        g.set_outer(0);
        CHECK(g.face_degree(0) == 3);
        int internal = 0;
        for (int v = 0; v < 4; ++v)
            if (!g.on_outer(v)) ++internal;
        CHECK(internal == 1);
    }
    SUBCASE("hexagonal outer face on a 6-cycle") {
        PlaneGraph g = cycle_graph(6);
        g.set_outer_by_boundary({0, 1, 2, 3, 4, 5});
        CHECK(g.face_degree(*g.outer()) == 6);
        for (int v = 0; v < 6; ++v) CHECK(g.on_outer(v));
    }
    SUBCASE("cube: 4 vertices off D") {
        PlaneGraph g = cube_graph();
        g.set_outer(0);
        int off = 0;
        for (int v = 0; v < 8; ++v)
            if (!g.on_outer(v)) ++off;
        CHECK(off == 4);
    }
    SUBCASE("unknown face id") {
        PlaneGraph g = k4_graph();
        CHECK_THROWS_WITH_AS(g.set_outer(17), doctest::Contains("UnknownFace"), Error);
    }
}

TEST_CASE("degree and incidence queries") {
    PlaneGraph k4 = k4_graph();
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    for (const Face& f : k4.faces()) CHECK(k4.face_degree(f.id) == 3);
    PlaneGraph cube = cube_graph();
    for (int v = 0; v < 8; ++v) {
        auto fs = cube.incident_faces(v);
        std::set<int> distinct(fs.begin(), fs.end());
        CHECK(distinct.size() == 3);
    }
    CHECK_THROWS_WITH_AS(cube.degree(99), doctest::Contains("UnknownElement"), Error);
    auto [l, r] = cube.faces_sharing_edge(0, 1);
    CHECK(l != r);
}

TEST_CASE("face accounting invariants on the standard maps") {
    for (PlaneGraph g : {k4_graph(), cube_graph(), icosahedron_graph(), wheel_graph(5), grid_graph(3, 4)}) {
        int V = g.vertex_count(), E = g.edge_count(), F = g.face_count();
        CHECK(V - E + F == 2);
        int face_deg_sum = 0;
        for (const Face& f : g.faces()) face_deg_sum += f.degree();
        CHECK(face_deg_sum == 2 * E);
        int deg_sum = 0;
        for (int v = 0; v < V; ++v) deg_sum += g.degree(v);
        CHECK(deg_sum == 2 * E);
        // each directed edge on exactly one face, reversal on the face across
        for (int v = 0; v < V; ++v)
            for (int u : g.rotation(v)) {
                int f = g.face_of(v, u);
                const auto& b = g.face(f).boundary;
                CHECK(std::count(b.begin(), b.end(), std::pair<int, int>{v, u}) == 1);
                CHECK(g.face_of(u, v) == g.faces_sharing_edge(v, u).second);
            }
    }
}

TEST_CASE("graph text format round trip") {
    PlaneGraph cube = cube_graph();
    cube.set_outer(2);
    std::string text = format_plane_graph(cube);
    PlaneGraph back = parse_plane_graph_string(text);
    CHECK(back.vertex_count() == 8);
    CHECK(back.edge_count() == 12);
    REQUIRE(back.outer().has_value());
    CHECK(back.face(*back.outer()).degree() == 4);
    CHECK(format_plane_graph(back) == text);
}

TEST_CASE("graph text format errors") {
    CHECK_THROWS_WITH_AS(parse_plane_graph_string("junk"), doctest::Contains("FormatError"), Error);
    CHECK_THROWS_WITH_AS(parse_plane_graph_string("2 5\n0: 1\n1: 0\n"), doctest::Contains("FormatError"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_plane_graph_string("3 3\n0: 1 2\n1: 2 0\n2: 0 1\nouter: 0 1\n"),
                         doctest::Contains("UnknownFace"), Error);
}

TEST_CASE("outer selection by boundary sequence accepts rotations and reflections") {
    PlaneGraph g = cube_graph();
    g.set_outer_by_boundary({2, 1, 0, 3});
    int f1 = *g.outer();
    g.set_outer_by_boundary({0, 1, 2, 3});
    CHECK(*g.outer() == f1);
}
