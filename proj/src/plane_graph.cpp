#include "dpcolor/plane_graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dpc {

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    out.reserve(boundary.size());
    for (const auto& [from, to] : boundary) out.push_back(from);
    return out;
}

bool Face::contains_vertex(int v) const {
    for (const auto& [from, to] : boundary)
        if (from == v) return true;
    return false;
}

PlaneGraph PlaneGraph::build(int n, std::vector<std::vector<int>> rotations) {
    if (n < 0 || static_cast<int>(rotations.size()) != n)
        fail(ErrorCode::FormatError, "rotation list count does not match vertex count");
    PlaneGraph g;
    g.n_ = n;
    g.rotation_ = std::move(rotations);
    g.pos_.resize(n);
    int64_t deg_sum = 0;
    for (int v = 0; v < n; ++v) {
        const auto& rot = g.rotation_[v];
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
            int u = rot[i];
            if (u < 0 || u >= n)
                fail(ErrorCode::FormatError, "vertex " + std::to_string(v) + " lists out-of-range neighbor " + std::to_string(u));
            if (u == v) fail(ErrorCode::LoopEdge, "vertex " + std::to_string(v) + " lists itself");
            if (g.pos_[v].count(u))
                fail(ErrorCode::ParallelEdge,
                     "vertex " + std::to_string(v) + " lists neighbor " + std::to_string(u) + " twice");
            g.pos_[v][u] = i;
        }
        deg_sum += static_cast<int64_t>(rot.size());
    }
    for (int v = 0; v < n; ++v)
        for (int u : g.rotation_[v])
            if (!g.pos_[u].count(v))
                fail(ErrorCode::AsymmetricAdjacency,
                     "edge " + std::to_string(v) + "-" + std::to_string(u) + " is one-sided");
    g.m_ = static_cast<int>(deg_sum / 2);
    return g;
}

int PlaneGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(rotation_[v].size());
}

const std::vector<int>& PlaneGraph::rotation(int v) const {
    check_vertex(v);
    return rotation_[v];
}

bool PlaneGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return pos_[u].count(v) > 0;
}

void PlaneGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(ErrorCode::UnknownElement, "vertex " + std::to_string(v) + " out of range");
}

void PlaneGraph::trace_faces() {
    if (faces_traced_) return;
    if (!as_simple_graph().connected())
        fail(ErrorCode::Disconnected, "face tracing requires a connected graph");
    faces_.clear();
    face_of_.clear();
    if (n_ == 1) {
        // isolated vertex: the single background face, empty boundary
        faces_.push_back(Face{0, {}});
        faces_traced_ = true;
        return;
    }
    for (int v = 0; v < n_; ++v) {
        for (int u : rotation_[v]) {
            if (face_of_.count(dir_key(v, u))) continue;
            Face f;
            f.id = static_cast<int>(faces_.size());
            int a = v, b = u;
            do {
                face_of_[dir_key(a, b)] = f.id;
                f.boundary.push_back({a, b});
                // next directed edge: successor of the reversed edge in the rotation at its head
                const auto& rot = rotation_[b];
                int i = pos_[b].at(a);
                int c = rot[(i + 1) % rot.size()];
                a = b;
                b = c;
            } while (!(a == v && b == u));
            faces_.push_back(std::move(f));
        }
    }
    int V = n_, E = m_, F = static_cast<int>(faces_.size());
    require_internal(V - E + F == 2, "face tracing violated Euler's formula");
    faces_traced_ = true;
}

const std::vector<Face>& PlaneGraph::faces() const {
    if (!faces_traced_) fail(ErrorCode::InternalInvariant, "faces not traced yet");
    return faces_;
}

const Face& PlaneGraph::face(int id) const {
    const auto& fs = faces();
    if (id < 0 || id >= static_cast<int>(fs.size()))
        fail(ErrorCode::UnknownFace, "face " + std::to_string(id) + " out of range");
    return fs[id];
}

int PlaneGraph::face_count() const { return static_cast<int>(faces().size()); }

int PlaneGraph::face_of(int u, int v) const {
    faces();
    if (!has_edge(u, v)) fail(ErrorCode::UnknownElement, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    return face_of_.at(dir_key(u, v));
}

std::pair<int, int> PlaneGraph::faces_sharing_edge(int u, int v) const {
    return {face_of(u, v), face_of(v, u)};
}

std::vector<int> PlaneGraph::incident_faces(int v) const {
    faces();
    check_vertex(v);
    std::vector<int> out;
    out.reserve(rotation_[v].size());
    for (int u : rotation_[v]) out.push_back(face_of_.at(dir_key(v, u)));
    return out;
}

void PlaneGraph::set_outer(int face_id) {
    face(face_id); // validates id (and that faces are traced)
    outer_ = face_id;
}

void PlaneGraph::set_outer_by_boundary(const std::vector<int>& cycle) {
    for (const Face& f : faces()) {
        if (f.degree() != static_cast<int>(cycle.size())) continue;
        std::vector<int> verts = f.vertices();
        int k = f.degree();
        for (int dir : {+1, -1}) {
            for (int shift = 0; shift < k; ++shift) {
                bool match = true;
                for (int i = 0; i < k && match; ++i) {
                    int idx = ((shift + dir * i) % k + k) % k;
                    match = verts[idx] == cycle[i];
                }
                if (match) {
                    outer_ = f.id;
                    return;
                }
            }
        }
    }
    fail(ErrorCode::UnknownFace, "no face matches the given outer boundary");
}

int PlaneGraph::outer_or_fail() const {
    if (!outer_) fail(ErrorCode::OuterFaceUnset, "operation requires a designated outer face");
    return *outer_;
}

bool PlaneGraph::on_outer(int v) const {
    return face(outer_or_fail()).contains_vertex(v);
}

int PlaneGraph::incident_triangle_count(int v) const {
    int t = 0;
    for (int fid : incident_faces(v))
        if (face(fid).degree() == 3) ++t;
    return t;
}

SimpleGraph PlaneGraph::as_simple_graph() const {
    SimpleGraph g(n_);
    for (int v = 0; v < n_; ++v)
        for (int u : rotation_[v])
            if (v < u) g.add_edge(v, u);
    return g;
}

PlaneGraph PlaneGraph::without_edge(int u, int v) const {
    if (!has_edge(u, v)) fail(ErrorCode::UnknownElement, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    std::vector<std::vector<int>> rot = rotation_;
    std::erase(rot[u], v);
    std::erase(rot[v], u);
    return build(n_, std::move(rot));
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(ErrorCode::FormatError, "expected integer, got '" + s + "'");
    }
}

} // namespace

PlaneGraph parse_plane_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() != 2) fail(ErrorCode::FormatError, "header must be 'n m'");
        n = parse_int(toks[0]);
        m = parse_int(toks[1]);
        break;
    }
    if (n < 0) fail(ErrorCode::FormatError, "missing 'n m' header");
    std::vector<std::vector<int>> rotations(n);
    std::vector<char> seen(n, 0);
    int read = 0;
    std::optional<std::vector<int>> outer_cycle;
    while (read < n && std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0].back() != ':') fail(ErrorCode::FormatError, "expected 'v:' rotation line, got '" + line + "'");
        int v = parse_int(toks[0].substr(0, toks[0].size() - 1));
        if (v < 0 || v >= n) fail(ErrorCode::FormatError, "rotation line for out-of-range vertex " + std::to_string(v));
        if (seen[v]) fail(ErrorCode::FormatError, "duplicate rotation line for vertex " + std::to_string(v));
        seen[v] = 1;
        for (size_t i = 1; i < toks.size(); ++i) rotations[v].push_back(parse_int(toks[i]));
        ++read;
    }
    if (read < n) fail(ErrorCode::FormatError, "expected " + std::to_string(n) + " rotation lines");
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "outer:") {
            std::vector<int> cyc;
            for (size_t i = 1; i < toks.size(); ++i) cyc.push_back(parse_int(toks[i]));
            if (cyc.empty()) fail(ErrorCode::FormatError, "empty outer line");
            outer_cycle = cyc;
        } else {
            fail(ErrorCode::FormatError, "unexpected trailing line '" + line + "'");
        }
    }
    PlaneGraph g = PlaneGraph::build(n, std::move(rotations));
    if (g.edge_count() != m)
        fail(ErrorCode::FormatError, "header claims " + std::to_string(m) + " edges, rotations give " +
                                         std::to_string(g.edge_count()));
    g.trace_faces();
    if (outer_cycle) g.set_outer_by_boundary(*outer_cycle);
    return g;
}

PlaneGraph parse_plane_graph_string(const std::string& text) {
    std::istringstream iss(text);
    return parse_plane_graph(iss);
}

PlaneGraph load_plane_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::FormatError, "cannot open graph file " + path);
    return parse_plane_graph(in);
}

std::string format_plane_graph(const PlaneGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << v << ':';
        for (int u : g.rotation(v)) out << ' ' << u;
        out << '\n';
    }
    if (g.outer()) {
        out << "outer:";
        for (int v : g.face(*g.outer()).vertices()) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

} // namespace dpc
