#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpcolor/graph.hpp"
#include "dpcolor/plane_graph.hpp"

namespace dpc {

// Simple cycle in canonical form: least vertex first, then the lexicographically
// smaller of the two directions. Cycles are embedding-independent, so these predicates
// take a SimpleGraph; the face-dependent ones below take a PlaneGraph.
using Cycle = std::vector<int>;

std::vector<Edge> cycle_edges(const Cycle& c);

// Every simple cycle of length 3..max_len, each reported once. max_len is capped at 8;
// the DFS-with-canonical-form approach is only meant for desk-scale graphs.
std::vector<Cycle> enumerate_cycles(const SimpleGraph& g, int max_len);

// Unordered pairs of distinct triangles sharing at least one edge.
std::vector<std::pair<Cycle, Cycle>> adjacent_triangles(const SimpleGraph& g);

struct ClassWitness {
    Cycle four_cycle;
    Cycle triangle_a;
    Cycle triangle_b;
};

// Checks the hypothesis class: no 4-cycle (cycle, not just face) sharing an edge with
// each of two distinct triangles. Returns a witness, or nullopt for pass.
std::optional<ClassWitness> class_check(const SimpleGraph& g);

struct SeparatingCycle {
    Cycle cycle;
    std::vector<int> interior; // vertices strictly inside
    std::vector<int> exterior; // vertices strictly outside (the side of D)
};

// All separating cycles of length 3..kmax. Interior/exterior are determined purely
// combinatorially: faces are split by dual connectivity with the cycle's edges
// removed, and the side holding D is the exterior.
std::vector<SeparatingCycle> separating_cycles(const PlaneGraph& g, int kmax = 6);

enum class FaceClass {
    Internal,      // F_k: boundary disjoint from D
    InternalOnD,   // F_k': boundary meets D
    Outer,         // D itself
};

std::vector<FaceClass> classify_faces(const PlaneGraph& g);

struct Sink {
    int face;
    std::vector<int> sources; // apex of the 3-face across each boundary edge, in walk order
};

// (4,4,4,4,4+)-faces in F_5 each of whose five edges lies on a 3-face.
std::vector<Sink> find_sinks(const PlaneGraph& g);

// 3-faces in F_3 containing a 4-vertex incident with at most one triangle and with no
// neighbor on D.
std::vector<int> special_faces(const PlaneGraph& g);

struct AuditViolation {
    char clause; // 'a'..'g'
    std::string description;
    std::vector<int> witness;
};

// Minimal-counterexample structure audit, clauses (a)-(g). S must be a single vertex
// or the boundary vertex set of some face, with |S| <= 6.
std::vector<AuditViolation> audit(const PlaneGraph& g, const std::vector<int>& S);

struct StructureReport {
    std::optional<ClassWitness> class_witness;
    std::vector<std::pair<Cycle, Cycle>> adjacent_triangle_pairs;
    std::vector<SeparatingCycle> separating;
    std::vector<Sink> sinks;
    std::vector<int> special;
    std::vector<FaceClass> face_classes;
    std::vector<AuditViolation> audit_violations;
    bool audit_ran = false;
};

StructureReport analyze_structure(const PlaneGraph& g, const std::optional<std::vector<int>>& audit_set);

} // namespace dpc
