#include "dpcolor/structure.hpp"

#include <algorithm>
#include <set>

namespace dpc {

std::vector<Edge> cycle_edges(const Cycle& c) {
    std::vector<Edge> out;
    int k = static_cast<int>(c.size());
    out.reserve(k);
    for (int i = 0; i < k; ++i) out.push_back(make_edge(c[i], c[(i + 1) % k]));
    return out;
}

std::vector<Cycle> enumerate_cycles(const SimpleGraph& g, int max_len) {
    require_internal(max_len >= 3 && max_len <= 8, "cycle length bound must be in 3..8");
    std::vector<Cycle> out;
    int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    Cycle path;

    // Canonical form: path[0] is the least vertex of the cycle and path[1] < path.back(),
    // so each cycle is produced exactly once.
    auto dfs = [&](auto&& self, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == path[0]) {
                if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
                continue;
            }
            if (w < path[0] || on_path[w]) continue;
            if (static_cast<int>(path.size()) == max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = 1;
        dfs(dfs, s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool shares_edge(const Cycle& a, const Cycle& b) {
    auto ea = cycle_edges(a);
    auto eb = cycle_edges(b);
    std::sort(ea.begin(), ea.end());
    for (const Edge& e : eb)
        if (std::binary_search(ea.begin(), ea.end(), e)) return true;
    return false;
}

} // namespace

std::vector<std::pair<Cycle, Cycle>> adjacent_triangles(const SimpleGraph& g) {
    std::vector<Cycle> tris;
    for (const Cycle& c : enumerate_cycles(g, 3))
        if (c.size() == 3) tris.push_back(c);
    std::vector<std::pair<Cycle, Cycle>> out;
    for (size_t i = 0; i < tris.size(); ++i)
        for (size_t j = i + 1; j < tris.size(); ++j)
            if (shares_edge(tris[i], tris[j])) out.push_back({tris[i], tris[j]});
    return out;
}

std::optional<ClassWitness> class_check(const SimpleGraph& g) {
    std::vector<Cycle> tris, fours;
    for (const Cycle& c : enumerate_cycles(g, 4)) {
        if (c.size() == 3) tris.push_back(c);
        else if (c.size() == 4) fours.push_back(c);
    }
    for (const Cycle& f : fours) {
        const Cycle* first = nullptr;
        for (const Cycle& t : tris) {
            if (!shares_edge(f, t)) continue;
            if (first) return ClassWitness{f, *first, t};
            first = &t;
        }
    }
    return std::nullopt;
}

std::vector<SeparatingCycle> separating_cycles(const PlaneGraph& g, int kmax) {
    int outer = g.outer_or_fail();
    std::vector<SeparatingCycle> out;
    int n = g.vertex_count();
    for (const Cycle& cyc : enumerate_cycles(g.as_simple_graph(), kmax)) {
        auto ce = cycle_edges(cyc);
        std::set<Edge> on_cycle(ce.begin(), ce.end());
        // flood the dual from D without crossing the cycle
        std::vector<char> reached(g.face_count(), 0);
        std::vector<int> stack{outer};
        reached[outer] = 1;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (const auto& [a, b] : g.face(f).boundary) {
                if (on_cycle.count(make_edge(a, b))) continue;
                int other = g.face_of(b, a);
                if (!reached[other]) {
                    reached[other] = 1;
                    stack.push_back(other);
                }
            }
        }
        std::vector<char> on_cyc_vertex(n, 0);
        for (int v : cyc) on_cyc_vertex[v] = 1;
        std::vector<int> interior, exterior;
        for (int v = 0; v < n; ++v) {
            if (on_cyc_vertex[v]) continue;
            // all faces of an off-cycle vertex lie on one side; the first is enough
            int f = g.incident_faces(v).front();
            (reached[f] ? exterior : interior).push_back(v);
        }
        require_internal(static_cast<int>(interior.size() + exterior.size() + cyc.size()) == n,
                         "cycle side partition lost vertices");
        if (!interior.empty() && !exterior.empty())
            out.push_back(SeparatingCycle{cyc, std::move(interior), std::move(exterior)});
    }
    return out;
}

std::vector<FaceClass> classify_faces(const PlaneGraph& g) {
    int outer = g.outer_or_fail();
    const Face& d = g.face(outer);
    std::vector<FaceClass> out(g.face_count(), FaceClass::Internal);
    for (const Face& f : g.faces()) {
        if (f.id == outer) {
            out[f.id] = FaceClass::Outer;
            continue;
        }
        bool meets = false;
        for (const auto& [from, to] : f.boundary)
            if (d.contains_vertex(from)) {
                meets = true;
                break;
            }
        out[f.id] = meets ? FaceClass::InternalOnD : FaceClass::Internal;
    }
    return out;
}

std::vector<Sink> find_sinks(const PlaneGraph& g) {
    auto classes = classify_faces(g);
    std::vector<Sink> out;
    for (const Face& f : g.faces()) {
        if (f.degree() != 5 || classes[f.id] != FaceClass::Internal) continue;
        std::vector<int> degs;
        for (int v : f.vertices()) degs.push_back(g.degree(v));
        std::sort(degs.begin(), degs.end());
        if (!(degs[0] == 4 && degs[1] == 4 && degs[2] == 4 && degs[3] == 4 && degs[4] >= 4)) continue;
        Sink s{f.id, {}};
        bool ok = true;
        for (const auto& [a, b] : f.boundary) {
            int other = g.face_of(b, a);
            const Face& t = g.face(other);
            if (t.degree() != 3) {
                ok = false;
                break;
            }
            for (int v : t.vertices())
                if (v != a && v != b) s.sources.push_back(v);
        }
        if (ok) out.push_back(std::move(s));
    }
    return out;
}

std::vector<int> special_faces(const PlaneGraph& g) {
    auto classes = classify_faces(g);
    const Face& d = g.face(g.outer_or_fail());
    std::vector<int> out;
    for (const Face& f : g.faces()) {
        if (f.degree() != 3 || classes[f.id] != FaceClass::Internal) continue;
        for (int v : f.vertices()) {
            if (g.degree(v) != 4 || g.incident_triangle_count(v) > 1) continue;
            bool touches_d = false;
            for (int u : g.rotation(v))
                if (d.contains_vertex(u)) {
                    touches_d = true;
                    break;
                }
            if (!touches_d) {
                out.push_back(f.id);
                break;
            }
        }
    }
    return out;
}

namespace {

std::vector<int> cut_vertices(const SimpleGraph& g) {
    // quadratic but obviously correct; audit graphs are desk-scale
    int n = g.vertex_count();
    std::vector<int> cuts;
    for (int skip = 0; skip < n; ++skip) {
        std::vector<char> seen(n, 0);
        seen[skip] = 1;
        int start = skip == 0 ? 1 : 0;
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n - 1) cuts.push_back(skip);
    }
    return cuts;
}

} // namespace

std::vector<AuditViolation> audit(const PlaneGraph& g, const std::vector<int>& S) {
    int outer = g.outer_or_fail();
    if (S.empty() || S.size() > 6)
        fail(ErrorCode::SBad, "S must be a single vertex or a face boundary with at most 6 vertices");
    std::set<int> sset(S.begin(), S.end());
    if (sset.size() != S.size()) fail(ErrorCode::SBad, "S contains repeated vertices");
    for (int v : S)
        if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::SBad, "S contains out-of-range vertex");
    if (S.size() > 1) {
        bool is_face = false;
        for (const Face& f : g.faces()) {
            auto verts = f.vertices();
            std::set<int> fs(verts.begin(), verts.end());
            if (fs == sset) {
                is_face = true;
                break;
            }
        }
        if (!is_face) fail(ErrorCode::SBad, "S is neither a single vertex nor the boundary vertex set of a face");
    }

    std::vector<AuditViolation> out;
    SimpleGraph sg = g.as_simple_graph();
    int n = g.vertex_count();

    // (a) V(G) != S
    if (static_cast<int>(sset.size()) == n)
        out.push_back({'a', "V(G) equals S", S});

    // (b) 2-connected
    if (!sg.connected()) {
        out.push_back({'b', "graph is disconnected", {}});
    } else if (n < 3) {
        out.push_back({'b', "too few vertices to be 2-connected", {}});
    } else {
        auto cuts = cut_vertices(sg);
        if (!cuts.empty()) out.push_back({'b', "cut vertex found", cuts});
    }

    // (c) vertices off S have degree >= 4
    {
        std::vector<int> low;
        for (int v = 0; v < n; ++v)
            if (!sset.count(v) && g.degree(v) < 4) low.push_back(v);
        if (!low.empty()) out.push_back({'c', "vertex off S with degree < 4", low});
    }

    // (d) no separating 3..6-cycle
    {
        auto seps = separating_cycles(g, 6);
        if (!seps.empty()) out.push_back({'d', "separating cycle found", seps.front().cycle});
    }

    // (e) S = V(D) and D is an induced cycle
    {
        const Face& d = g.face(outer);
        auto bd = d.vertices();
        std::set<int> dset(bd.begin(), bd.end());
        if (dset.size() != bd.size()) {
            out.push_back({'e', "outer boundary is not a simple cycle", bd});
        } else if (dset != sset) {
            out.push_back({'e', "S differs from V(D)", bd});
        } else {
            // chords: edges between non-consecutive boundary vertices
            int k = static_cast<int>(bd.size());
            std::set<Edge> ring;
            for (int i = 0; i < k; ++i) ring.insert(make_edge(bd[i], bd[(i + 1) % k]));
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    Edge e = make_edge(bd[i], bd[j]);
                    if (!ring.count(e) && g.has_edge(e.u, e.v)) {
                        out.push_back({'e', "chord on D", {e.u, e.v}});
                        goto chord_done;
                    }
                }
        chord_done:;
        }
    }

    // (f) non-adjacent vertices of D share no neighbor off D
    {
        const Face& d = g.face(outer);
        auto bd = d.vertices();
        std::set<int> dset(bd.begin(), bd.end());
        for (size_t i = 0; i < bd.size(); ++i)
            for (size_t j = i + 1; j < bd.size(); ++j) {
                int u = bd[i], v = bd[j];
                if (g.has_edge(u, v)) continue;
                for (int w : g.rotation(u)) {
                    if (dset.count(w) || !g.has_edge(v, w)) continue;
                    out.push_back({'f', "non-adjacent D-vertices with common neighbor off D", {u, v, w}});
                    goto f_done;
                }
            }
    f_done:;
    }

    // (g) each sink has at most one source on D
    {
        const Face& d = g.face(outer);
        for (const Sink& s : find_sinks(g)) {
            std::set<int> on_d;
            for (int src : s.sources)
                if (d.contains_vertex(src)) on_d.insert(src);
            if (on_d.size() >= 2) {
                std::vector<int> w{s.face};
                w.insert(w.end(), on_d.begin(), on_d.end());
                out.push_back({'g', "sink with two sources on D", w});
            }
        }
    }

    return out;
}

StructureReport analyze_structure(const PlaneGraph& g, const std::optional<std::vector<int>>& audit_set) {
    StructureReport r;
    SimpleGraph sg = g.as_simple_graph();
    r.class_witness = class_check(sg);
    r.adjacent_triangle_pairs = adjacent_triangles(sg);
    if (g.outer()) {
        r.separating = separating_cycles(g, 6);
        r.face_classes = classify_faces(g);
        r.sinks = find_sinks(g);
        r.special = special_faces(g);
        if (audit_set) {
            r.audit_violations = audit(g, *audit_set);
            r.audit_ran = true;
        }
    }
    return r;
}

} // namespace dpc
