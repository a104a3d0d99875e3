#include "dpcolor/discharging.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dpcolor/structure.hpp"

namespace dpc {

const char* rule_tag_name(RuleTag tag) {
    switch (tag) {
        case RuleTag::R1a: return "R1a";
        case RuleTag::R1b: return "R1b";
        case RuleTag::R2a: return "R2a";
        case RuleTag::R2b: return "R2b";
        case RuleTag::R3: return "R3";
        case RuleTag::R4In: return "R4-in";
        case RuleTag::R4Out: return "R4-out";
    }
    return "?";
}

void ChargeLedger::set_initial(ElementId e, Charge c) {
    if (e.kind == ElementId::Kind::Vertex) vertex_initial_.at(e.id) = c;
    else face_initial_.at(e.id) = c;
}

Charge ChargeLedger::initial(ElementId e) const {
    return e.kind == ElementId::Kind::Vertex ? vertex_initial_.at(e.id) : face_initial_.at(e.id);
}

void ChargeLedger::add_transfer(ElementId from, ElementId to, Charge amount, RuleTag rule) {
    if (amount.zero()) return; // zero transfers carry no information
    transfers_.push_back({from, to, amount, rule});
}

Charge ChargeLedger::final_charge(ElementId e) const {
    Charge c = initial(e);
    for (const Transfer& t : transfers_) {
        if (t.to == e) c += t.amount;
        if (t.from == e) c -= t.amount;
    }
    return c;
}

Charge ChargeLedger::total_initial() const {
    Charge c;
    for (const Charge& x : vertex_initial_) c += x;
    for (const Charge& x : face_initial_) c += x;
    return c;
}

Charge ChargeLedger::total_final() const {
    return total_initial(); // transfers conserve charge by construction
}

void ChargeLedger::sort_transfers() {
    std::stable_sort(transfers_.begin(), transfers_.end(), [](const Transfer& a, const Transfer& b) {
        if (a.rule != b.rule) return a.rule < b.rule;
        if (!(a.from == b.from)) return a.from < b.from;
        return a.to < b.to;
    });
}

ChargeLedger initial_charges(const PlaneGraph& g) {
    int outer = g.outer_or_fail();
    ChargeLedger ledger(g.vertex_count(), g.face_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        ledger.set_initial(vertex_elem(v), Charge(2 * g.degree(v) - 6));
    for (const Face& f : g.faces())
        ledger.set_initial(face_elem(f.id), Charge(f.id == outer ? f.degree() + 6 : f.degree() - 6));
    require_internal(ledger.total_initial().zero(), "initial charges must sum to zero by Euler's formula");
    return ledger;
}

namespace {

struct RuleContext {
    const PlaneGraph& g;
    int outer;
    std::vector<FaceClass> classes;
    std::set<int> special;                       // special 3-face ids
    std::vector<std::vector<int>> sinks_of;      // vertex -> sink face ids (with multiplicity)
    const Face* d;

    explicit RuleContext(const PlaneGraph& graph) : g(graph), outer(graph.outer_or_fail()) {
        classes = classify_faces(g);
        auto specials = special_faces(g);
        special.insert(specials.begin(), specials.end());
        sinks_of.resize(g.vertex_count());
        for (const Sink& s : find_sinks(g))
            for (int src : s.sources) sinks_of[src].push_back(s.face);
        d = &g.face(outer);
    }

    bool on_d(int v) const { return d->contains_vertex(v); }
    bool neighbor_on_d(int v) const {
        for (int u : g.rotation(v))
            if (on_d(u)) return true;
        return false;
    }
    bool in_f45(int f) const {
        int deg = g.face(f).degree();
        return classes[f] == FaceClass::Internal && (deg == 4 || deg == 5);
    }
};

// Distributes `rest` evenly over `faces`; a negative share means the structural
// assumptions behind the rule are violated in this graph.
void give_evenly(ChargeLedger& ledger, int v, const std::vector<int>& faces, Charge rest, RuleTag tag) {
    if (faces.empty()) return; // vertex keeps the remainder
    if (rest.negative())
        fail(ErrorCode::NegativeEvenShare,
             "vertex " + std::to_string(v) + " would distribute a negative remainder " + rest.str());
    Charge share = rest / Charge(static_cast<int64_t>(faces.size()));
    for (int f : faces) ledger.add_transfer(vertex_elem(v), face_elem(f), share, tag);
}

void rule_4_vertex(const RuleContext& ctx, ChargeLedger& ledger, int v) {
    const auto corners = ctx.g.incident_faces(v);
    int t = ctx.g.incident_triangle_count(v);
    if (t == 2) {
        for (int f : corners)
            if (ctx.g.face(f).degree() == 3)
                ledger.add_transfer(vertex_elem(v), face_elem(f), Charge(1), RuleTag::R1b);
        return;
    }
    if (t > 2) return; // outside the class assumptions; no rule fires
    if (!ctx.neighbor_on_d(v)) {
        for (int f : corners) ledger.add_transfer(vertex_elem(v), face_elem(f), Charge(1, 2), RuleTag::R1a);
        return;
    }
    Charge rest(2);
    std::vector<int> others;
    for (int f : corners) {
        if (ctx.g.face(f).degree() == 3) {
            ledger.add_transfer(vertex_elem(v), face_elem(f), Charge(1), RuleTag::R1a);
            rest -= Charge(1);
        } else if (ctx.in_f45(f)) {
            ledger.add_transfer(vertex_elem(v), face_elem(f), Charge(1, 2), RuleTag::R1a);
            rest -= Charge(1, 2);
        } else {
            others.push_back(f);
        }
    }
    give_evenly(ledger, v, others, rest, RuleTag::R1a);
}

void rule_5_vertex(const RuleContext& ctx, ChargeLedger& ledger, int v) {
    const auto corners = ctx.g.incident_faces(v);
    if (!ctx.neighbor_on_d(v)) {
        for (int f : corners) {
            if (ctx.g.face(f).degree() == 3)
                ledger.add_transfer(vertex_elem(v), face_elem(f),
                                    ctx.special.count(f) ? Charge(5, 4) : Charge(1), RuleTag::R2a);
            else
                ledger.add_transfer(vertex_elem(v), face_elem(f), Charge(1, 2), RuleTag::R2a);
        }
        for (int s : ctx.sinks_of[v])
            ledger.add_transfer(vertex_elem(v), face_elem(s), Charge(1, 4), RuleTag::R2a);
        return;
    }
    Charge rest(4);
    std::vector<int> others;
    for (int f : corners) {
        if (ctx.g.face(f).degree() == 3) {
            ledger.add_transfer(vertex_elem(v), face_elem(f), Charge(5, 4), RuleTag::R2b);
            rest -= Charge(5, 4);
        } else if (ctx.in_f45(f)) {
            ledger.add_transfer(vertex_elem(v), face_elem(f), Charge(1, 2), RuleTag::R2b);
            rest -= Charge(1, 2);
        } else {
            others.push_back(f);
        }
    }
    for (int s : ctx.sinks_of[v]) {
        ledger.add_transfer(vertex_elem(v), face_elem(s), Charge(1, 4), RuleTag::R2b);
        rest -= Charge(1, 4);
    }
    give_evenly(ledger, v, others, rest, RuleTag::R2b);
}

void rule_6plus_vertex(const RuleContext& ctx, ChargeLedger& ledger, int v) {
    for (int f : ctx.g.incident_faces(v))
        ledger.add_transfer(vertex_elem(v), face_elem(f),
                            ctx.g.face(f).degree() == 3 ? Charge(5, 4) : Charge(1, 2), RuleTag::R3);
    for (int s : ctx.sinks_of[v])
        ledger.add_transfer(vertex_elem(v), face_elem(s), Charge(1, 4), RuleTag::R3);
}

} // namespace

ChargeLedger apply_rules(const PlaneGraph& g, ChargeLedger ledger) {
    RuleContext ctx(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (ctx.on_d(v)) {
            // R4: the whole initial charge goes to D, even when negative
            ledger.add_transfer(vertex_elem(v), face_elem(ctx.outer), ledger.initial(vertex_elem(v)),
                                RuleTag::R4In);
            continue;
        }
        switch (g.degree(v)) {
            case 4: rule_4_vertex(ctx, ledger, v); break;
            case 5: rule_5_vertex(ctx, ledger, v); break;
            default:
                if (g.degree(v) >= 6) rule_6plus_vertex(ctx, ledger, v);
                break; // 3--vertices off D have no rule
        }
    }
    for (const Face& f : g.faces()) {
        if (ctx.classes[f.id] != FaceClass::InternalOnD) continue;
        ledger.add_transfer(face_elem(ctx.outer), face_elem(f.id),
                            f.degree() == 3 ? Charge(2) : Charge(7, 4), RuleTag::R4Out);
    }
    ledger.sort_transfers();
    return ledger;
}

BalanceComponents outer_balance(const PlaneGraph& g) {
    int outer = g.outer_or_fail();
    const Face& d = g.face(outer);
    if (d.degree() > 6)
        fail(ErrorCode::OuterTooLarge, "d(D) = " + std::to_string(d.degree()) + " voids the positivity argument");

    auto classes = classify_faces(g);
    BalanceComponents b;
    b.d_outer = d.degree();

    std::set<int> dset;
    for (int v : d.vertices()) dset.insert(v);
    SimpleGraph sg = g.as_simple_graph();
    std::vector<Edge> cross;
    for (const Edge& e : sg.edges())
        if (dset.count(e.u) + dset.count(e.v) == 1) cross.push_back(e);
    b.e_cross = static_cast<int>(cross.size());
    for (int v : dset) b.sum_d_minus_2 += g.degree(v) - 2;

    Charge sum_initial_d;
    for (int v : dset) sum_initial_d += Charge(2 * g.degree(v) - 6);
    for (const Face& f : g.faces()) {
        if (classes[f.id] != FaceClass::InternalOnD) continue;
        if (f.degree() == 3) ++b.f3_prime;
        else ++b.fk_prime;
    }
    b.payout = Charge(2) * Charge(b.f3_prime) + Charge(7, 4) * Charge(b.fk_prime);
    b.mu_outer_closed_form = Charge(d.degree() + 6) + sum_initial_d - b.payout;

    // Edge-budget feasibility: every cross edge carries 15/8; each F' face draws 1 per
    // cross boundary edge if it is a 3-face and 7/8 otherwise. Needs at least two cross
    // edges per F' face to cover that face's payout.
    std::map<Edge, Charge> load;
    b.budget_feasible = true;
    for (const Face& f : g.faces()) {
        if (classes[f.id] != FaceClass::InternalOnD) continue;
        Charge rate = f.degree() == 3 ? Charge(1) : Charge(7, 8);
        int cross_edges = 0;
        for (const auto& [x, y] : f.boundary) {
            if (dset.count(x) + dset.count(y) != 1) continue;
            ++cross_edges;
            load[make_edge(x, y)] += rate;
        }
        if (cross_edges < 2) {
            b.budget_feasible = false;
            b.deficient_faces.push_back(f.id);
        }
    }
    for (const auto& [e, c] : load)
        if (c > Charge(15, 8)) {
            b.budget_feasible = false;
            b.overloaded_edges.push_back(e);
        }
    return b;
}

DischargeReport verify(const PlaneGraph& g, const ChargeLedger& ledger) {
    int outer = g.outer_or_fail();
    DischargeReport r;

    Charge total;
    for (int v = 0; v < g.vertex_count(); ++v) {
        Charge c = ledger.final_charge(vertex_elem(v));
        total += c;
        if (c.negative()) r.negative_elements.push_back({vertex_elem(v), c});
    }
    for (const Face& f : g.faces()) {
        Charge c = ledger.final_charge(face_elem(f.id));
        total += c;
        if (f.id == outer) r.outer_final = c;
        else if (c.negative()) r.negative_elements.push_back({face_elem(f.id), c});
    }
    r.conservation_ok = total == ledger.total_initial() && total.zero();

    // Eq. (3): the R4 accounting identity for D. Holds on every instance.
    auto classes = classify_faces(g);
    Charge eq3 = Charge(g.face(outer).degree() + 6);
    std::set<int> dverts;
    for (int v : g.face(outer).vertices()) dverts.insert(v);
    for (int v : dverts) eq3 += Charge(2 * g.degree(v) - 6);
    for (const Face& f : g.faces()) {
        if (classes[f.id] != FaceClass::InternalOnD) continue;
        eq3 -= f.degree() == 3 ? Charge(2) : Charge(7, 4);
    }
    r.eq3_value = eq3;
    r.eq3_matches = eq3 == r.outer_final;

    if (g.face(outer).degree() <= 6) r.balance = outer_balance(g);
    return r;
}

} // namespace dpc
