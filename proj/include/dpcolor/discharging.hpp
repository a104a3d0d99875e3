#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpcolor/plane_graph.hpp"
#include "dpcolor/rational.hpp"

namespace dpc {

using Charge = Rational;

struct ElementId {
    enum class Kind { Vertex, Face } kind;
    int id;

    bool operator==(const ElementId& o) const { return kind == o.kind && id == o.id; }
    bool operator<(const ElementId& o) const { return kind != o.kind ? kind < o.kind : id < o.id; }
    std::string str() const { return (kind == Kind::Vertex ? "v" : "f") + std::to_string(id); }
};

inline ElementId vertex_elem(int v) { return {ElementId::Kind::Vertex, v}; }
inline ElementId face_elem(int f) { return {ElementId::Kind::Face, f}; }

enum class RuleTag { R1a, R1b, R2a, R2b, R3, R4In, R4Out };
const char* rule_tag_name(RuleTag tag);

struct Transfer {
    ElementId from;
    ElementId to;
    Charge amount;
    RuleTag rule;
};

// Exact bookkeeping: initial charge per element, an append-only transfer log, finals
// derived from the two. Transfers conserve charge by construction.
class ChargeLedger {
public:
    ChargeLedger(int vertices, int faces) : vertex_initial_(vertices), face_initial_(faces) {}

    int vertex_count() const { return static_cast<int>(vertex_initial_.size()); }
    int face_count() const { return static_cast<int>(face_initial_.size()); }

    void set_initial(ElementId e, Charge c);
    Charge initial(ElementId e) const;
    void add_transfer(ElementId from, ElementId to, Charge amount, RuleTag rule);
    const std::vector<Transfer>& transfers() const { return transfers_; }

    Charge final_charge(ElementId e) const;
    Charge total_initial() const;
    Charge total_final() const;

    // Deterministic order: rule tag, then source, then destination.
    void sort_transfers();

private:
    std::vector<Charge> vertex_initial_;
    std::vector<Charge> face_initial_;
    std::vector<Transfer> transfers_;
};

// mu(v) = 2 d(v) - 6, mu(f) = d(f) - 6 for internal faces, mu(D) = d(D) + 6.
// The total is checked to be exactly zero.
ChargeLedger initial_charges(const PlaneGraph& g);

// Rules R1-R4. Assumes the graph passes class_check (no adjacent triangles, so every
// vertex has t <= floor(d/2)); local shapes outside the rules' cases simply keep their
// charge. NegativeEvenShare is raised if an "evenly" split would hand out a negative
// amount.
ChargeLedger apply_rules(const PlaneGraph& g, ChargeLedger ledger);

struct BalanceComponents {
    int d_outer = 0;
    int e_cross = 0;                  // e(D, V - D)
    int f3_prime = 0;                 // |F_3'|
    int fk_prime = 0;                 // sum over k >= 4 of |F_k'|
    Charge payout;                    // 2 |F_3'| + 7/4 sum |F_k'|
    int sum_d_minus_2 = 0;            // sum over v in D of (d(v) - 2): equals e_cross for chordless D
    Charge mu_outer_closed_form;      // d(D) + 6 + sum(2d(v)-6) - payout
    bool budget_feasible = false;     // 15/8-per-cross-edge budget covers every F' face
    std::vector<int> deficient_faces; // F' faces with fewer than 2 cross boundary edges
    std::vector<Edge> overloaded_edges;
};

// The outer-face balance of the final-count argument. Only defined for d(D) <= 6;
// larger outer faces void the positivity claim and raise OuterTooLarge.
BalanceComponents outer_balance(const PlaneGraph& g);

struct DischargeReport {
    std::vector<std::pair<ElementId, Charge>> negative_elements; // vertices + internal faces only
    Charge outer_final;
    bool conservation_ok = false;
    Charge eq3_value;       // closed-form mu*(D) from the R4 accounting identity
    bool eq3_matches = false;
    std::optional<BalanceComponents> balance; // present iff d(D) <= 6
};

DischargeReport verify(const PlaneGraph& g, const ChargeLedger& ledger);

} // namespace dpc
