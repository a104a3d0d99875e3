#include "dpcolor/pipeline.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "dpcolor/dp.hpp"
#include "dpcolor/generator.hpp"
#include "dpcolor/rng.hpp"
#include "dpcolor/structure.hpp"

namespace dpc {

namespace {

// A face usable as the precolored set S: simple boundary, no chord, 3..6 vertices.
std::optional<int> chordless_small_face(const PlaneGraph& g) {
    std::optional<int> best;
    int best_deg = 0;
    for (const Face& f : g.faces()) {
        int deg = f.degree();
        if (deg < 3 || deg > 6) continue;
        auto verts = f.vertices();
        std::set<int> vs(verts.begin(), verts.end());
        if (static_cast<int>(vs.size()) != deg) continue;
        std::set<Edge> ring;
        for (int i = 0; i < deg; ++i) ring.insert(make_edge(verts[i], verts[(i + 1) % deg]));
        bool chord = false;
        for (int i = 0; i < deg && !chord; ++i)
            for (int j = i + 1; j < deg && !chord; ++j) {
                Edge e = make_edge(verts[i], verts[j]);
                if (!ring.count(e) && g.has_edge(e.u, e.v)) chord = true;
            }
        if (chord) continue;
        if (!best || deg < best_deg) {
            best = f.id;
            best_deg = deg;
        }
    }
    return best;
}

// All valid colorings of the subgraph induced by `verts` under the restriction of c.
std::vector<Coloring> enumerate_induced_colorings(const SimpleGraph& g, const CorrespondenceAssignment& c,
                                                  const std::vector<int>& verts) {
    std::vector<Coloring> out;
    int k = c.k();
    std::vector<int> pick(verts.size(), 1);
    while (true) {
        Coloring phi(g.vertex_count());
        for (size_t i = 0; i < verts.size(); ++i) phi.label[verts[i]] = pick[i];
        bool ok = true;
        for (size_t i = 0; i < verts.size() && ok; ++i)
            for (size_t j = i + 1; j < verts.size() && ok; ++j) {
                if (!g.has_edge(verts[i], verts[j])) continue;
                if (c.match(verts[i], verts[j], phi.label[verts[i]]) == phi.label[verts[j]]) ok = false;
            }
        if (ok) out.push_back(std::move(phi));
        size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] > k) pick[pos++] = 1;
        if (pos == pick.size()) break;
    }
    return out;
}

InstanceReport run_instance(const RunConfig& config, int index, Rng rng) {
    InstanceReport r;
    r.index = index;
    r.seed = rng.next();
    try {
        int span = std::max(1, config.max_n - config.min_n + 1);
        int n = config.min_n + static_cast<int>(rng.below(span));
        PlaneGraph g = gen_in_class(n, r.seed);
        r.n = g.vertex_count();
        r.m = g.edge_count();
        SimpleGraph sg = g.as_simple_graph();

        r.class_pass = !class_check(sg).has_value();

        for (int a = 0; a < config.assignments; ++a) {
            CorrespondenceAssignment c = random_assignment(sg, config.k, rng, true);
            ++r.solves_attempted;
            auto sol = solve(sg, c, Coloring(sg.vertex_count()));
            if (sol && is_valid(sg, c, *sol, true)) {
                ++r.solves_ok;
            } else if (sol) {
                r.errors.push_back("solver returned an invalid coloring");
            } else if (config.k >= 4 && r.class_pass) {
                r.errors.push_back("UNSAT on an in-class 4-assignment (theorem violation or solver bug)");
            }
        }

        if (config.run_extend) {
            PlaneGraph ext = g;
            if (auto face = chordless_small_face(ext)) {
                ext.set_outer(*face);
                auto verts = ext.face(*face).vertices();
                CorrespondenceAssignment c = random_assignment(sg, config.k, rng, true);
                auto precolorings = enumerate_induced_colorings(sg, c, verts);
                int take = std::min<int>(config.extend_precolorings, static_cast<int>(precolorings.size()));
                for (int i = 0; i < take; ++i) {
                    const Coloring& phi0 = precolorings[rng.below(precolorings.size())];
                    ++r.extends_attempted;
                    auto sol = solve(sg, c, phi0);
                    if (sol && is_valid(sg, c, *sol, true)) {
                        bool agrees = true;
                        for (int v : verts)
                            if (sol->label[v] != phi0.label[v]) agrees = false;
                        if (agrees) ++r.extends_ok;
                        else r.errors.push_back("extension changed the precolored set");
                    } else {
                        r.errors.push_back("precoloring failed to extend");
                    }
                }
            }
        }

        if (config.run_audit) {
            const Face& d = g.face(g.outer_or_fail());
            auto verts = d.vertices();
            std::set<int> vs(verts.begin(), verts.end());
            if (vs.size() == verts.size() && vs.size() <= 6)
                r.audit_violations = static_cast<int>(audit(g, verts).size());
        }

        if (config.run_discharge) {
            ChargeLedger ledger = apply_rules(g, initial_charges(g));
            DischargeReport rep = verify(g, ledger);
            r.discharge_conservation = rep.conservation_ok;
            r.discharge_eq3 = rep.eq3_matches;
            r.outer_final = rep.outer_final;
            if (!rep.conservation_ok) r.errors.push_back("discharge conservation failed");
            if (!rep.eq3_matches) r.errors.push_back("ledger disagrees with the closed-form outer charge");
        }
    } catch (const Error& e) {
        r.errors.push_back(e.what());
    }

    r.ok = r.class_pass && r.errors.empty() && r.solves_ok == r.solves_attempted &&
           r.extends_ok == r.extends_attempted &&
           (!config.run_discharge || (r.discharge_conservation && r.discharge_eq3));
    return r;
}

} // namespace

BatchReport pipeline_verify(const RunConfig& config) {
    BatchReport report;
    report.config = config;
    Rng base(config.seed);
    std::vector<std::future<InstanceReport>> futures;
    futures.reserve(config.instances);
    for (int i = 0; i < config.instances; ++i)
        futures.push_back(std::async(std::launch::async, run_instance, config, i,
                                     base.fork(static_cast<uint64_t>(i))));
    report.all_ok = true;
    for (auto& f : futures) {
        report.instances.push_back(f.get());
        report.all_ok = report.all_ok && report.instances.back().ok;
    }
    return report;
}

} // namespace dpc
