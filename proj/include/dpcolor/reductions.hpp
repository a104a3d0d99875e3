#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dpcolor/dp.hpp"
#include "dpcolor/plane_graph.hpp"

namespace dpc {

enum class ConfigKind { I, II };

// A reducible configuration around an internal 4-vertex v with N[v] disjoint from D.
// ring is v's cyclic neighbor order rotated so that:
//   kind I:  ring[0], ring[2] are the two opposite 4-vertices (deleted with v),
//   kind II: [v, ring[0], ring[1]] is the unique incident 3-face and ring[0] is a
//            4-vertex (the (4,4,*) violation witness).
// ring[1], ring[3] are the identification pair in both kinds.
struct Configuration {
    ConfigKind kind;
    int v;
    std::array<int, 4> ring;
    int tri_face = -1; // kind II only
};

std::vector<Configuration> find_config_i(const PlaneGraph& g);
std::vector<Configuration> find_config_ii(const PlaneGraph& g);

struct ReductionPlan {
    ConfigKind kind;
    int k = 0;
    std::vector<int> deleted;              // {v1, v, v3} or {v1, v}, ids in g
    std::pair<int, int> identified;        // (v2, v4), ids in g
    int representative = -1;               // image of the identified pair in g'
    RelabelPlan relabel;                   // straightening of C_vv2, C_vv4, applied before surgery
    std::vector<int> completion_order;     // greedy lift order over the deleted vertices
    std::vector<int> vertex_map;           // g id -> g' id, -1 for deleted vertices
};

struct ReductionResult {
    SimpleGraph reduced;                   // abstract graph, no embedding is maintained
    CorrespondenceAssignment assignment;   // straightened C restricted to the surviving edges
    ReductionPlan plan;
};

// Deletes the configuration's vertices, identifies ring[1] with ring[3], and restricts
// the straightened assignment to the surviving edges (the identified vertex inherits
// both endpoints' matchings). Fails with SurgeryCreatesLoopOrParallel when the
// identified pair is adjacent or shares a surviving neighbor; the structural
// preconditions (class pass, no separating 3..6-cycle) rule that out.
ReductionResult reduce(const PlaneGraph& g, const CorrespondenceAssignment& c, const Configuration& config);

// Transfers a valid coloring of the reduced graph back to g: surviving vertices keep
// their colors, both identified vertices take the merged vertex's color, and the
// deleted vertices are completed greedily from residual lists in the plan's order.
// EmptyResidual signals a violated precondition.
Coloring lift(const SimpleGraph& g, const CorrespondenceAssignment& c, const ReductionPlan& plan,
              const Coloring& phi_reduced);

} // namespace dpc
