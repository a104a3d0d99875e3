#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dpcolor/errors.hpp"
#include "dpcolor/graph.hpp"

namespace dpc {

// One boundary walk of a face. The boundary stores directed edges in trace order; the
// vertex sequence is the sequence of tails. Face degree is the boundary length, which
// equals the number of distinct boundary vertices exactly when the graph is 2-connected.
struct Face {
    int id = -1;
    std::vector<std::pair<int, int>> boundary; // directed edges (from, to)

    int degree() const { return static_cast<int>(boundary.size()); }
    std::vector<int> vertices() const;
    bool contains_vertex(int v) const;
};

// Plane graph given by a rotation system: for every vertex, the cyclic clockwise order
// of its neighbors. Faces are always derived from the rotations by tracing, never input,
// so there is one source of truth for the embedding. After build + trace_faces the
// object is treated as immutable and may be shared freely across threads.
class PlaneGraph {
public:
    // Validates symmetry and simplicity of the rotation lists. Faces are not yet traced.
    static PlaneGraph build(int n, std::vector<std::vector<int>> rotations);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const;

    const std::vector<int>& rotation(int v) const;
    bool has_edge(int u, int v) const;

    // Traces every directed edge into its face; requires a connected graph, and checks
    // V - E + F = 2 afterwards. Idempotent.
    void trace_faces();
    bool faces_traced() const { return faces_traced_; }
    const std::vector<Face>& faces() const;
    const Face& face(int id) const;
    int face_count() const;
    int face_degree(int id) const { return face(id).degree(); }

    // Face on the left of the walk u->v (the face whose boundary contains that directed edge).
    int face_of(int u, int v) const;
    // The two faces incident to the undirected edge uv (equal only in degenerate walks).
    std::pair<int, int> faces_sharing_edge(int u, int v) const;
    // Faces around v in rotation order (one per incident corner).
    std::vector<int> incident_faces(int v) const;

    void set_outer(int face_id);
    // Selects D by its boundary vertex sequence, up to rotation and reflection.
    void set_outer_by_boundary(const std::vector<int>& cycle);
    std::optional<int> outer() const { return outer_; }
    int outer_or_fail() const;
    bool on_outer(int v) const;

    // Number of 3-faces incident to v.
    int incident_triangle_count(int v) const;

    SimpleGraph as_simple_graph() const;

    // Returns a copy with edge uv removed from both rotations; faces must be re-traced.
    PlaneGraph without_edge(int u, int v) const;

private:
    PlaneGraph() = default;
    void check_vertex(int v) const;
    int64_t dir_key(int u, int v) const { return static_cast<int64_t>(u) * n_ + v; }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> rotation_;
    std::vector<std::unordered_map<int, int>> pos_; // neighbor -> index in rotation_[v]
    bool faces_traced_ = false;
    std::vector<Face> faces_;
    std::unordered_map<int64_t, int> face_of_; // directed edge -> face id
    std::optional<int> outer_;
};

// Line-oriented text format (rotations are clockwise, vertices 0-based):
//   line 1:  n m
//   n lines: v: u1 u2 ... ud
//   optional: outer: v1 v2 ... vk
// Parsing traces faces and, when the outer line is present, designates D.
PlaneGraph parse_plane_graph(std::istream& in);
PlaneGraph parse_plane_graph_string(const std::string& text);
PlaneGraph load_plane_graph(const std::string& path);
std::string format_plane_graph(const PlaneGraph& g);

} // namespace dpc
