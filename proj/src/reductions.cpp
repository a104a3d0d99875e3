#include "dpcolor/reductions.hpp"

#include <algorithm>

namespace dpc {

namespace {

// v and all of its neighbors avoid D
bool closed_neighborhood_off_outer(const PlaneGraph& g, int v) {
    const Face& d = g.face(g.outer_or_fail());
    if (d.contains_vertex(v)) return false;
    for (int u : g.rotation(v))
        if (d.contains_vertex(u)) return false;
    return true;
}

std::array<int, 4> rotate_ring(const std::vector<int>& rot, int start) {
    std::array<int, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = rot[(start + i) % 4];
    return out;
}

} // namespace

std::vector<Configuration> find_config_i(const PlaneGraph& g) {
    g.outer_or_fail();
    std::vector<Configuration> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4 || !closed_neighborhood_off_outer(g, v)) continue;
        const auto& rot = g.rotation(v);
        for (int i = 0; i < 2; ++i)
            if (g.degree(rot[i]) == 4 && g.degree(rot[i + 2]) == 4)
                out.push_back(Configuration{ConfigKind::I, v, rotate_ring(rot, i), -1});
    }
    return out;
}

std::vector<Configuration> find_config_ii(const PlaneGraph& g) {
    g.outer_or_fail();
    std::vector<Configuration> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4 || !closed_neighborhood_off_outer(g, v)) continue;
        if (g.incident_triangle_count(v) != 1) continue;
        const auto& rot = g.rotation(v);
        auto faces = g.incident_faces(v);
        for (int i = 0; i < 4; ++i) {
            // the face in the gap (rot[i], rot[i+1]) carries the directed edge
            // (v, rot[i+1]), i.e. incident_faces[(i+1) % 4]
            int gap_face = faces[(i + 1) % 4];
            if (g.face(gap_face).degree() != 3) continue;
            int a = rot[i], b = rot[(i + 1) % 4];
            std::array<int, 4> ring;
            if (g.degree(b) == 4) {
                // reflect the cyclic order so the 4-vertex lands on ring[0]
                ring = {b, a, rot[(i + 3) % 4], rot[(i + 2) % 4]};
            } else if (g.degree(a) == 4) {
                ring = rotate_ring(rot, i);
            } else {
                break; // f is a (4,5+,5+)-face: no violation here
            }
            out.push_back(Configuration{ConfigKind::II, v, ring, gap_face});
            break;
        }
    }
    return out;
}

ReductionResult reduce(const PlaneGraph& g, const CorrespondenceAssignment& c, const Configuration& config) {
    SimpleGraph sg = g.as_simple_graph();
    int n = sg.vertex_count();
    int v = config.v;
    int v1 = config.ring[0], v2 = config.ring[1], v3 = config.ring[2], v4 = config.ring[3];
    require_internal(g.degree(v) == 4, "configuration center must be a 4-vertex");
    for (int u : config.ring) require_internal(g.has_edge(v, u), "configuration ring must be N(v)");
    require_internal(closed_neighborhood_off_outer(g, v), "configuration must avoid D");

    std::vector<int> deleted = config.kind == ConfigKind::I ? std::vector<int>{v1, v, v3}
                                                            : std::vector<int>{v1, v};

    if (sg.has_edge(v2, v4))
        fail(ErrorCode::SurgeryCreatesLoopOrParallel,
             "identified pair " + std::to_string(v2) + "," + std::to_string(v4) + " is adjacent (loop)");
    for (int w : sg.neighbors(v2)) {
        if (w == v || std::find(deleted.begin(), deleted.end(), w) != deleted.end()) continue;
        if (sg.has_edge(v4, w))
            fail(ErrorCode::SurgeryCreatesLoopOrParallel,
                 "identified pair shares surviving neighbor " + std::to_string(w) + " (parallel edge)");
    }

    // straighten the two identification edges, renaming labels at v2, v, v4 only
    StraightenResult st = straighten(sg, c, {make_edge(v, v2), make_edge(v, v4)});

    std::vector<int> vmap(n, -1);
    int next = 0;
    for (int a = 0; a < n; ++a) {
        if (a == v4 || std::find(deleted.begin(), deleted.end(), a) != deleted.end()) continue;
        vmap[a] = next++;
    }
    vmap[v4] = vmap[v2];

    SimpleGraph reduced(next);
    for (const Edge& e : sg.edges()) {
        int a = vmap[e.u], b = vmap[e.v];
        if (a < 0 || b < 0) continue;
        require_internal(a != b, "surgery produced a loop despite the precondition checks");
        reduced.add_edge(a, b);
    }

    CorrespondenceAssignment ca(reduced, c.k());
    for (const Edge& e : sg.edges()) {
        if (vmap[e.u] < 0 || vmap[e.v] < 0) continue;
        for (auto [cu, cv] : st.assignment.pairs(e.u, e.v)) ca.add_pair(vmap[e.u], vmap[e.v], cu, cv);
    }

    ReductionPlan plan;
    plan.kind = config.kind;
    plan.k = c.k();
    plan.deleted = deleted;
    plan.identified = {v2, v4};
    plan.representative = vmap[v2];
    plan.relabel = st.plan;
    plan.completion_order = config.kind == ConfigKind::I ? std::vector<int>{v1, v3, v}
                                                         : std::vector<int>{v1, v};
    plan.vertex_map = std::move(vmap);
    return ReductionResult{std::move(reduced), std::move(ca), std::move(plan)};
}

Coloring lift(const SimpleGraph& g, const CorrespondenceAssignment& c, const ReductionPlan& plan,
              const Coloring& phi_reduced) {
    int n = g.vertex_count();
    require_internal(static_cast<int>(plan.vertex_map.size()) == n, "plan does not fit this graph");

    // redo the straightening rename so that the reduced coloring speaks our labels
    CorrespondenceAssignment straightened(g, c.k());
    for (const Edge& e : g.edges())
        for (auto [cu, cv] : c.pairs(e.u, e.v))
            straightened.add_pair(e.u, e.v, plan.relabel.perm[e.u][cu], plan.relabel.perm[e.v][cv]);

    Coloring phi(n);
    for (int a = 0; a < n; ++a) {
        int b = plan.vertex_map[a];
        if (b < 0) continue;
        require_internal(phi_reduced.colored(b), "reduced coloring must be total");
        phi.label[a] = phi_reduced.label[b];
    }
    for (int x : plan.completion_order) {
        auto list = residual_list(g, straightened, phi, x);
        if (list.empty())
            fail(ErrorCode::EmptyResidual, "no residual label for vertex " + std::to_string(x) +
                                               "; a reduction precondition was violated");
        phi.label[x] = list.front();
    }
    Coloring out = plan.relabel.undo(phi);
    require_internal(is_valid(g, c, out, true), "lifted coloring failed validation");
    return out;
}

} // namespace dpc
