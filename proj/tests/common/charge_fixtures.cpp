#include "charge_fixtures.hpp"

namespace dpc::testing {

PlaneGraph six_vertex_fixture() {
    // center 0 with neighbors 1..6; triangles in alternating gaps, pentagons between
    // (a quad between two triangles at 0 would be a 4-cycle adjacent to both)
    std::vector<std::vector<int>> faces = {
        {0, 1, 2},
        {0, 3, 4},
        {0, 5, 6},
        {0, 2, 7, 8, 3},
        {0, 4, 9, 10, 5},
        {0, 6, 11, 12, 1},
        {2, 1, 12, 11, 6, 5, 10, 9, 4, 3, 8, 7},
    };
    PlaneGraph inner = plane_from_faces(13, faces);
    inner.set_outer_by_boundary({2, 1, 12, 11, 6, 5, 10, 9, 4, 3, 8, 7});
    return add_collar(inner);
}

PlaneGraph special_face_fixture() {
    // 0 = the 4-vertex, 1, 2 = the 5-vertices (degree 5 after the collar spoke),
    // 8, 9 = the shared quad that raises both w-degrees symmetrically
    std::vector<std::vector<int>> faces = {
        {0, 1, 2},
        {0, 2, 6, 3},
        {0, 3, 7, 4},
        {0, 4, 5, 1},
        {2, 1, 8, 9},
        {2, 9, 8, 1, 5, 4, 7, 3, 6},
    };
    PlaneGraph inner = plane_from_faces(10, faces);
    inner.set_outer_by_boundary({2, 9, 8, 1, 5, 4, 7, 3, 6});
    return add_collar(inner);
}

PlaneGraph f4_prime_fixture() {
    // f = [0,1,2,3]; triangles [2,1,4] (flanking f's edge 1-2) and [8,3,7] (away from
    // f); quads A=[4,1,5,6] and E=[7,3,2,9] absorb the 1/2 shares of p and q.
    std::vector<std::vector<int>> faces = {
        {0, 1, 2, 3},
        {2, 1, 4},
        {4, 1, 5, 6},
        {5, 1, 0, 11},
        {12, 0, 3, 8},
        {8, 3, 7},
        {7, 3, 2, 9},
        {9, 2, 4, 10},
        {0, 12, 8, 7, 9, 10, 4, 6, 5, 11},
    };
    PlaneGraph inner = plane_from_faces(13, faces);
    inner.set_outer_by_boundary({0, 12, 8, 7, 9, 10, 4, 6, 5, 11});
    return add_collar(inner, 0, {0});
}

PlaneGraph f5_prime_fixture() {
    PlaneGraph inner = plane_from_faces(5, {{0, 1, 2, 3, 4}, {4, 3, 2, 1, 0}});
    // both pentagons match the boundary sequence up to reflection; pick by direction
    inner.set_outer(inner.face_of(1, 0));
    return add_collar(inner, 0, {0});
}

SinkFixture sink_fixture() {
    // 0 = v; 1,2 / 3,4 = the triangle corners of the two sinks; 5 = the D-neighbor x;
    // 6..8 / 9..11 = the remaining sink corners; 12..15 / 16..19 = the sink apexes
    // (12..15 for A, one of which, 13, stays on D); 20..33 = pads keeping the apex
    // gap faces pentagonal.
    std::vector<std::vector<int>> faces = {
        {0, 1, 2},                 // tri_A, apex of sink A on edge 1-2
        {0, 3, 4},                 // tri_B
        {0, 2, 12, 19, 3},         // P: the F_5 face between the triangles
        {0, 4, 16, 20, 5},         // Q: meets D at 5
        {0, 5, 21, 15, 1},         // R: meets D at 5
        {2, 1, 8, 7, 6},           // sink A
        {2, 6, 12},                // apexes around sink A
        {6, 7, 13},
        {7, 8, 14},
        {8, 1, 15},
        {4, 3, 11, 10, 9},         // sink B
        {4, 9, 16},                // apexes around sink B
        {9, 10, 17},
        {10, 11, 18},
        {11, 3, 19},
        {12, 6, 13, 23, 22},       // apex gap pentagons, sink A side
        {13, 7, 14, 25, 24},
        {14, 8, 15, 27, 26},
        {16, 9, 17, 29, 28},       // apex gap pentagons, sink B side
        {17, 10, 18, 31, 30},
        {18, 11, 19, 33, 32},
        {5, 20, 16, 28, 29, 17, 30, 31, 18, 32, 33, 19,
         12, 22, 23, 13, 24, 25, 14, 26, 27, 15, 21},
    };
    PlaneGraph inner = plane_from_faces(34, faces);
    inner.set_outer_by_boundary({5, 20, 16, 28, 29, 17, 30, 31, 18, 32, 33, 19,
                                 12, 22, 23, 13, 24, 25, 14, 26, 27, 15, 21});
    SinkFixture fx{add_collar(inner, 0, {5, 13}), 0, -1, -1};
    fx.sink_a = fx.g.face_of(2, 1);
    fx.sink_b = fx.g.face_of(4, 3);
    return fx;
}

} // namespace dpc::testing
