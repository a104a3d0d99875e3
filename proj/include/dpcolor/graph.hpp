#pragma once

#include <vector>

#include "dpcolor/errors.hpp"

namespace dpc {

struct Edge {
    int u;
    int v;

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

// Canonical endpoint order for an undirected edge.
inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Abstract simple undirected graph: adjacency only, no embedding. This is what the
// solver and the reduction surgery operate on; PlaneGraph layers a rotation system
// on top of it.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }
    const std::vector<Edge>& edges() const { return edges_; }

    bool connected() const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count()) fail(ErrorCode::UnknownElement, "vertex " + std::to_string(v) + " out of range");
    }

    std::vector<std::vector<int>> adj_; // each list kept sorted
    std::vector<Edge> edges_;
};

} // namespace dpc
