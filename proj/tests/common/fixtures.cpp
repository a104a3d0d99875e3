#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dpc::testing {

PlaneGraph plane_from_faces(int n, const std::vector<std::vector<int>>& faces) {
    // succ[v][u] = w  whenever some face walk passes u -> v -> w
    std::vector<std::map<int, int>> succ(n);
    std::set<std::pair<int, int>> seen_directed;
    for (const auto& f : faces) {
        require_internal(f.size() >= 2, "face with fewer than two vertices");
        int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) {
            int a = f[i], b = f[(i + 1) % len], c = f[(i + 2) % len];
            require_internal(a >= 0 && a < n, "face vertex out of range");
            require_internal(seen_directed.insert({a, b}).second,
                             "directed edge " + std::to_string(a) + "->" + std::to_string(b) +
                                 " appears in two faces; fixture orientation is inconsistent");
            require_internal(!succ[b].count(a), "conflicting successor at vertex " + std::to_string(b));
            succ[b][a] = c;
        }
    }
    std::vector<std::vector<int>> rotations(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) require_internal(false, "vertex " + std::to_string(v) + " appears in no face");
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            rotations[v].push_back(cur);
            auto it = succ[v].find(cur);
            require_internal(it != succ[v].end(), "rotation at vertex " + std::to_string(v) + " does not close");
            cur = it->second;
        } while (cur != start && rotations[v].size() <= succ[v].size());
        require_internal(cur == start && rotations[v].size() == succ[v].size(),
                         "rotation at vertex " + std::to_string(v) + " is not a single cycle");
    }
    PlaneGraph g = PlaneGraph::build(n, std::move(rotations));
    g.trace_faces();
    require_internal(g.face_count() == static_cast<int>(faces.size()),
                     "traced face count differs from fixture face list");
    for (const auto& f : faces) {
        int id = g.face_of(f[0], f[1]);
        require_internal(g.face(id).degree() == static_cast<int>(f.size()), "traced face degree mismatch");
    }
    return g;
}

PlaneGraph triangle_graph() { return plane_from_faces(3, {{0, 1, 2}, {2, 1, 0}}); }

PlaneGraph k4_graph() {
    return plane_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {3, 2, 1}});
}

PlaneGraph cube_graph() {
    return plane_from_faces(8, {{0, 1, 2, 3},
                                {0, 4, 5, 1},
                                {1, 5, 6, 2},
                                {2, 6, 7, 3},
                                {3, 7, 4, 0},
                                {7, 6, 5, 4}});
}

PlaneGraph icosahedron_graph() {
    std::vector<std::vector<int>> faces;
    auto up = [](int i) { return 1 + (i % 5); };      // upper pentagon 1..5
    auto lo = [](int i) { return 6 + (i % 5); };      // lower pentagon 6..10
    for (int i = 0; i < 5; ++i) faces.push_back({0, up(i), up(i + 1)});
    for (int i = 0; i < 5; ++i) faces.push_back({up(i), lo(i), up(i + 1)});
    for (int i = 0; i < 5; ++i) faces.push_back({up(i + 1), lo(i), lo(i + 1)});
    for (int i = 0; i < 5; ++i) faces.push_back({lo(i), 11, lo(i + 1)});
    return plane_from_faces(12, faces);
}

PlaneGraph rectify(const PlaneGraph& g) {
    std::map<Edge, int> edge_id;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.rotation(v))
            if (v < u) {
                int id = static_cast<int>(edge_id.size());
                edge_id[make_edge(v, u)] = id;
            }
    std::vector<std::vector<int>> faces;
    for (const Face& f : g.faces()) {
        std::vector<int> walk;
        for (const auto& [a, b] : f.boundary) walk.push_back(edge_id.at(make_edge(a, b)));
        faces.push_back(walk);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> walk;
        const auto& rot = g.rotation(v);
        for (auto it = rot.rbegin(); it != rot.rend(); ++it) walk.push_back(edge_id.at(make_edge(v, *it)));
        faces.push_back(walk);
    }
    return plane_from_faces(static_cast<int>(edge_id.size()), faces);
}

PlaneGraph cycle_graph(int n) {
    std::vector<int> fwd(n), bwd(n);
    for (int i = 0; i < n; ++i) {
        fwd[i] = i;
        bwd[i] = n - 1 - i;
    }
    return plane_from_faces(n, {fwd, bwd});
}

PlaneGraph wheel_graph(int spokes) {
    int hub = spokes;
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < spokes; ++i) faces.push_back({i, (i + 1) % spokes, hub});
    std::vector<int> outer;
    for (int i = spokes - 1; i >= 0; --i) outer.push_back(i);
    faces.push_back(outer);
    return plane_from_faces(spokes + 1, faces);
}

PlaneGraph grid_graph(int h, int w) {
    auto id = [w](int r, int c) { return r * w + c; };
    std::vector<std::vector<int>> faces;
    for (int r = 0; r + 1 < h; ++r)
        for (int c = 0; c + 1 < w; ++c)
            faces.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1), id(r + 1, c)});
    std::vector<int> outer;
    for (int r = 0; r + 1 < h; ++r) outer.push_back(id(r, 0));
    for (int c = 0; c + 1 < w; ++c) outer.push_back(id(h - 1, c));
    for (int r = h - 1; r > 0; --r) outer.push_back(id(r, w - 1));
    for (int c = w - 1; c > 0; --c) outer.push_back(id(0, c));
    faces.push_back(outer);
    PlaneGraph g = plane_from_faces(h * w, faces);
    g.set_outer_by_boundary(outer);
    return g;
}

PlaneGraph add_collar(const PlaneGraph& g, int pads, const std::set<int>& keep_on_outer) {
    int outer = g.outer_or_fail();
    std::vector<int> bd = g.face(outer).vertices();
    std::set<int> distinct(bd.begin(), bd.end());
    require_internal(distinct.size() == bd.size(), "collar requires a simple outer boundary");
    for (int v : keep_on_outer) require_internal(distinct.count(v), "exception vertex not on the boundary");
    int n = g.vertex_count();
    int m = static_cast<int>(bd.size());
    std::vector<std::vector<int>> faces;
    for (const Face& f : g.faces())
        if (f.id != outer) faces.push_back(f.vertices());

    // Ring layout per boundary vertex: a fresh spoke vertex, or the vertex itself
    // flanked by two pads when it must stay on the outer face. `pads` extra ring
    // vertices follow each slot group.
    std::vector<int> entry(m), exit(m);
    std::vector<int> ring;
    int next = n;
    for (int i = 0; i < m; ++i) {
        if (keep_on_outer.count(bd[i])) {
            entry[i] = next++;
            ring.push_back(entry[i]);
            ring.push_back(bd[i]);
            exit[i] = next++;
            ring.push_back(exit[i]);
        } else {
            entry[i] = exit[i] = next++;
            ring.push_back(entry[i]);
        }
        for (int p = 0; p < pads; ++p) ring.push_back(next++);
    }
    int ring_len = static_cast<int>(ring.size());
    auto ring_index = [&](int v) {
        for (int i = 0; i < ring_len; ++i)
            if (ring[i] == v) return i;
        require_internal(false, "ring bookkeeping lost a vertex");
        return -1;
    };
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        std::vector<int> collar{bd[i], bd[j], entry[j]};
        // ring arc from entry[j] back to exit[i], against ring orientation
        int at = ring_index(entry[j]);
        int stop = ring_index(exit[i]);
        while (true) {
            at = (at - 1 + ring_len) % ring_len;
            if (at == stop) break;
            collar.push_back(ring[at]);
        }
        collar.push_back(exit[i]);
        faces.push_back(collar);
    }
    faces.push_back(ring);
    PlaneGraph out = plane_from_faces(next, faces);
    out.set_outer_by_boundary(ring);
    return out;
}

PlaneGraph grid_ring_gadget(int pads) {
    // ids: 0 center, 1 N, 2 E, 3 S, 4 W, 5 NE, 6 SE, 7 SW, 8 NW; ring 9..16
    std::vector<std::vector<int>> faces = {
        {8, 1, 0, 4}, // NW cell
        {1, 5, 2, 0}, // NE cell
        {0, 2, 6, 3}, // SE cell
        {4, 0, 3, 7}, // SW cell
        {5, 1, 8, 4, 7, 3, 6, 2}, // boundary
    };
    PlaneGraph inner = plane_from_faces(9, faces);
    inner.set_outer_by_boundary({5, 1, 8, 4, 7, 3, 6, 2});
    return add_collar(inner, pads);
}

PlaneGraph grid_ring_with_triangles(int triangles, int pads) {
    require_internal(triangles == 1 || triangles == 2, "supported triangle counts: 1, 2");
    if (triangles == 1) {
        // NW corner collapsed: triangle [1, 0, 4]; ids as grid_ring_gadget minus NW=8
        std::vector<std::vector<int>> faces = {
            {1, 0, 4},
            {1, 5, 2, 0},
            {0, 2, 6, 3},
            {4, 0, 3, 7},
            {5, 1, 4, 7, 3, 6, 2},
        };
        PlaneGraph inner = plane_from_faces(8, faces);
        inner.set_outer_by_boundary({5, 1, 4, 7, 3, 6, 2});
        return add_collar(inner, pads);
    }
    // Two opposite triangles at the center. The remaining two cells get doubled
    // corners (pentagons), otherwise N/E and S/W would have a second common neighbor
    // and the gadget would contain a 4-cycle adjacent to both triangles.
    // ids: 0 C, 1 N, 2 E, 3 S, 4 W, 5+6 NE pair, 7+8 SW pair
    std::vector<std::vector<int>> faces = {
        {1, 0, 4},          // triangle in the N-W gap
        {0, 2, 3},          // triangle in the S-E gap
        {1, 5, 6, 2, 0},    // NE pentagon
        {4, 0, 3, 8, 7},    // SW pentagon
        {5, 1, 4, 7, 8, 3, 2, 6},
    };
    PlaneGraph inner = plane_from_faces(9, faces);
    inner.set_outer_by_boundary({5, 1, 4, 7, 8, 3, 2, 6});
    return add_collar(inner, pads);
}

} // namespace dpc::testing
