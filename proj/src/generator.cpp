#include "dpcolor/generator.hpp"

#include <algorithm>

#include "dpcolor/rng.hpp"
#include "dpcolor/structure.hpp"

namespace dpc {

namespace {

// Insert a new vertex inside triangle face [a, b, c], joined to all three corners.
std::vector<std::vector<int>> insert_in_triangle(const PlaneGraph& g, int face_id) {
    const Face& f = g.face(face_id);
    require_internal(f.degree() == 3, "stacking requires a triangle face");
    int a = f.boundary[0].first, b = f.boundary[1].first, c = f.boundary[2].first;
    int w = g.vertex_count();
    std::vector<std::vector<int>> rot;
    rot.reserve(w + 1);
    for (int v = 0; v < w; ++v) rot.push_back(g.rotation(v));
    auto insert_after = [&](int v, int prev) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), prev);
        require_internal(it != r.end(), "rotation insertion lost an edge");
        r.insert(it + 1, w);
    };
    insert_after(a, c);
    insert_after(b, a);
    insert_after(c, b);
    rot.push_back({b, a, c});
    return rot;
}

} // namespace

PlaneGraph gen_in_class(int n, uint64_t seed) {
    require_internal(n >= 3, "generator needs n >= 3");
    Rng rng(seed);
    PlaneGraph g = PlaneGraph::build(3, {{1, 2}, {2, 0}, {0, 1}});
    g.trace_faces();
    while (g.vertex_count() < n) {
        int f = rng.below_int(g.face_count());
        auto rot = insert_in_triangle(g, f);
        g = PlaneGraph::build(g.vertex_count() + 1, std::move(rot));
        g.trace_faces();
    }

    // prune until the class condition holds; every deletion removes a cycle edge
    int budget = g.edge_count() + 8;
    while (true) {
        auto witness = class_check(g.as_simple_graph());
        if (!witness) break;
        if (--budget < 0) fail(ErrorCode::GenerationStalled, "class pruning exceeded its deletion budget");
        auto edges = cycle_edges(witness->four_cycle);
        Edge e = edges[rng.below_int(static_cast<int>(edges.size()))];
        g = g.without_edge(e.u, e.v);
        g.trace_faces();
    }

    int best = g.face(0).degree();
    for (const Face& f : g.faces()) best = std::min(best, f.degree());
    std::vector<int> candidates;
    for (const Face& f : g.faces())
        if (f.degree() == best) candidates.push_back(f.id);
    g.set_outer(candidates[rng.below_int(static_cast<int>(candidates.size()))]);
    return g;
}

} // namespace dpc
