#pragma once

#include <set>
#include <vector>

#include "dpcolor/plane_graph.hpp"

namespace dpc::testing {

// Builds a PlaneGraph from an explicit face list of a sphere map. Every face is a
// vertex cycle; the walks must be consistently oriented, i.e. each directed edge
// appears in exactly one face. Rotations are recovered from the face corners and the
// result is re-traced and checked against the input, so a malformed fixture fails
// loudly at construction instead of corrupting a test downstream.
PlaneGraph plane_from_faces(int n, const std::vector<std::vector<int>>& faces);

// Small standard maps.
PlaneGraph triangle_graph();
PlaneGraph k4_graph();
PlaneGraph cube_graph();
PlaneGraph icosahedron_graph();
// Rectification of a triangulated plane graph: one vertex per edge, a face per
// original face and per original vertex. rectify(icosahedron) is the icosidodecahedron.
PlaneGraph rectify(const PlaneGraph& g);
PlaneGraph cycle_graph(int n);
// Wheel: hub n-1 joined to an n-1 cycle.
PlaneGraph wheel_graph(int spokes);
// w x h grid in rotation-system form; vertex (r, c) has id r * w + c.
PlaneGraph grid_graph(int h, int w);

// Wraps the designated outer face of g in a ring: each boundary vertex gets a fresh
// spoke on the new outer cycle (gaining one degree and leaving D), except the
// `keep_on_outer` vertices, which are threaded into the ring between two fresh pads
// and stay on D. `pads` inserts extra ring vertices after every slot; pads >= 1
// prevents new separating 6-cycles through the ring.
PlaneGraph add_collar(const PlaneGraph& g, int pads = 0, const std::set<int>& keep_on_outer = {});

// 3x3 grid wrapped in a collar ring; the center vertex 0 is an internal 4-vertex
// whose four neighbors 1..4 (N,E,S,W) are internal 4-vertices (both diagonals).
// Triangle-free. pads = extra ring vertices per collar segment; with pads >= 1 the
// gadget has no separating 3..6-cycle (at the cost of a larger ring).
PlaneGraph grid_ring_gadget(int pads = 0);
// Same, but with cells collapsed to triangles at the center vertex (corner deleted):
// triangles = 1 gives a config-II shape, 2 gives the opposite pair for the t=2
// charge case.
PlaneGraph grid_ring_with_triangles(int triangles, int pads = 0);

} // namespace dpc::testing
