#include "dpcolor/dp.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace dpc {

bool Coloring::total() const {
    for (int c : label)
        if (c == 0) return false;
    return true;
}

CorrespondenceAssignment::CorrespondenceAssignment(const SimpleGraph& g, int k) : k_(k) {
    require_internal(k >= 1, "assignment width must be at least 1");
    for (const Edge& e : g.edges())
        matchings_[e] = Matching{std::vector<int>(k + 1, 0), std::vector<int>(k + 1, 0)};
}

bool CorrespondenceAssignment::has_entry(int u, int v) const { return matchings_.count(make_edge(u, v)) > 0; }

const CorrespondenceAssignment::Matching& CorrespondenceAssignment::entry(int u, int v) const {
    auto it = matchings_.find(make_edge(u, v));
    if (it == matchings_.end())
        fail(ErrorCode::UnknownElement, "assignment has no entry for edge " + std::to_string(u) + "-" + std::to_string(v));
    return it->second;
}

CorrespondenceAssignment::Matching& CorrespondenceAssignment::entry_mut(int u, int v) {
    return const_cast<Matching&>(entry(u, v));
}

void CorrespondenceAssignment::add_pair(int u, int v, int cu, int cv) {
    if (cu < 1 || cu > k_ || cv < 1 || cv > k_)
        fail(ErrorCode::FormatError, "label out of range [1.." + std::to_string(k_) + "]");
    Edge e = make_edge(u, v);
    if (u != e.u) std::swap(cu, cv); // store in canonical direction
    Matching& m = entry_mut(e.u, e.v);
    if (m.fwd[cu] != 0 || m.bwd[cv] != 0)
        fail(ErrorCode::FormatError, "matching property violated on edge " + std::to_string(e.u) + "-" +
                                         std::to_string(e.v));
    m.fwd[cu] = cv;
    m.bwd[cv] = cu;
}

int CorrespondenceAssignment::match(int u, int v, int cu) const {
    require_internal(cu >= 1 && cu <= k_, "label out of range");
    const Matching& m = entry(u, v);
    return u < v ? m.fwd[cu] : m.bwd[cu];
}

std::vector<std::pair<int, int>> CorrespondenceAssignment::pairs(int u, int v) const {
    std::vector<std::pair<int, int>> out;
    for (int cu = 1; cu <= k_; ++cu) {
        int cv = match(u, v, cu);
        if (cv != 0) out.push_back({cu, cv});
    }
    return out;
}

bool CorrespondenceAssignment::straight(int u, int v) const {
    for (auto [a, b] : pairs(u, v))
        if (a != b) return false;
    return true;
}

std::vector<Edge> CorrespondenceAssignment::entries() const {
    std::vector<Edge> out;
    out.reserve(matchings_.size());
    for (const auto& [e, m] : matchings_) out.push_back(e);
    return out;
}

Coloring RelabelPlan::apply(const Coloring& phi) const {
    Coloring out(phi.size());
    for (int v = 0; v < phi.size(); ++v)
        if (phi.colored(v)) out.label[v] = perm[v][phi.label[v]];
    return out;
}

Coloring RelabelPlan::undo(const Coloring& phi) const {
    Coloring out(phi.size());
    for (int v = 0; v < phi.size(); ++v) {
        if (!phi.colored(v)) continue;
        for (int c = 1; c <= k; ++c)
            if (perm[v][c] == phi.label[v]) {
                out.label[v] = c;
                break;
            }
    }
    return out;
}

bool is_valid(const SimpleGraph& g, const CorrespondenceAssignment& c, const Coloring& phi, bool require_total) {
    require_internal(phi.size() == g.vertex_count(), "coloring size mismatch");
    for (int v = 0; v < phi.size(); ++v)
        if (phi.label[v] < 0 || phi.label[v] > c.k()) return false;
    if (require_total && !phi.total()) return false;
    for (const Edge& e : g.edges()) {
        if (!phi.colored(e.u) || !phi.colored(e.v)) continue;
        if (c.match(e.u, e.v, phi.label[e.u]) == phi.label[e.v]) return false;
    }
    return true;
}

std::vector<int> residual_list(const SimpleGraph& g, const CorrespondenceAssignment& c, const Coloring& phi,
                               int x) {
    if (phi.colored(x)) fail(ErrorCode::AlreadyColored, "vertex " + std::to_string(x) + " is already colored");
    std::vector<char> forbidden(c.k() + 1, 0);
    for (int u : g.neighbors(x)) {
        if (!phi.colored(u)) continue;
        int cx = c.match(u, x, phi.label[u]);
        if (cx != 0) forbidden[cx] = 1;
    }
    std::vector<int> out;
    for (int l = 1; l <= c.k(); ++l)
        if (!forbidden[l]) out.push_back(l);
    return out;
}

namespace {

bool solve_rec(const SimpleGraph& g, const CorrespondenceAssignment& c, Coloring& phi) {
    int best = -1;
    size_t best_count = 0;
    std::vector<int> best_list;
    for (int v = 0; v < phi.size(); ++v) {
        if (phi.colored(v)) continue;
        auto list = residual_list(g, c, phi, v);
        if (best == -1 || list.size() < best_count) {
            best = v;
            best_count = list.size();
            best_list = std::move(list);
            if (best_count == 0) return false;
        }
    }
    if (best == -1) return true;
    for (int l : best_list) {
        phi.label[best] = l;
        if (solve_rec(g, c, phi)) return true;
        phi.label[best] = 0;
    }
    return false;
}

} // namespace

std::optional<Coloring> solve(const SimpleGraph& g, const CorrespondenceAssignment& c, const Coloring& phi0) {
    require_internal(phi0.size() == g.vertex_count(), "precoloring size mismatch");
    if (!is_valid(g, c, phi0, false))
        fail(ErrorCode::InvalidPrecoloring, "the precoloring already conflicts");
    Coloring phi = phi0;
    if (solve_rec(g, c, phi)) return phi;
    return std::nullopt;
}

StraightenResult straighten(const SimpleGraph& g, const CorrespondenceAssignment& c,
                            const std::vector<Edge>& forest) {
    int n = g.vertex_count();
    int k = c.k();
    std::vector<std::vector<std::pair<int, int>>> tree(n); // vertex -> (neighbor, edge idx)
    std::set<Edge> seen;
    for (const Edge& e : forest) {
        if (!g.has_edge(e.u, e.v)) fail(ErrorCode::UnknownElement, "forest edge not in graph");
        if (!seen.insert(make_edge(e.u, e.v)).second) fail(ErrorCode::NotAForest, "repeated forest edge");
        tree[e.u].push_back({e.v, 0});
        tree[e.v].push_back({e.u, 0});
    }
    std::vector<int> component(n, -1);
    int comps = 0;
    std::vector<std::vector<int>> perm(n);
    for (int root = 0; root < n; ++root) {
        if (component[root] != -1) continue;
        component[root] = comps;
        perm[root].resize(k + 1);
        std::iota(perm[root].begin(), perm[root].end(), 0); // identity at each component root
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int p = queue[qi];
            for (auto [child, _] : tree[p]) {
                if (component[child] != -1) continue;
                component[child] = comps;
                // choose perm[child] so that the matched pairs of edge (p, child) land on equal labels
                perm[child].assign(k + 1, 0);
                for (int cp = 1; cp <= k; ++cp) {
                    int cc = c.match(p, child, cp);
                    if (cc != 0) perm[child][cc] = perm[p][cp];
                }
                std::vector<char> used(k + 1, 0);
                for (int l = 1; l <= k; ++l) used[perm[child][l]] = 1;
                int next = 1;
                for (int l = 1; l <= k; ++l) {
                    if (perm[child][l] != 0) continue;
                    while (used[next]) ++next;
                    perm[child][l] = next;
                    used[next] = 1;
                }
                queue.push_back(child);
            }
        }
        ++comps;
    }
    // an edge set is a forest exactly when |E| = n - #components
    if (static_cast<int>(forest.size()) != n - comps)
        fail(ErrorCode::NotAForest, "edge set contains a cycle");

    CorrespondenceAssignment out(g, k);
    for (const Edge& e : g.edges())
        for (auto [cu, cv] : c.pairs(e.u, e.v)) out.add_pair(e.u, e.v, perm[e.u][cu], perm[e.v][cv]);
    for (const Edge& e : forest)
        require_internal(out.straight(e.u, e.v), "straightening left a forest edge bent");

    RelabelPlan plan{k, std::move(perm)};
    return {std::move(out), std::move(plan)};
}

std::pair<int, CorrespondenceAssignment> from_list_assignment(const SimpleGraph& g,
                                                              const std::vector<std::vector<int>>& lists) {
    require_internal(static_cast<int>(lists.size()) == g.vertex_count(), "one list per vertex required");
    size_t k = 0;
    for (const auto& l : lists) {
        if (l.empty()) fail(ErrorCode::FormatError, "empty color list");
        std::set<int> distinct(l.begin(), l.end());
        if (distinct.size() != l.size()) fail(ErrorCode::FormatError, "repeated color within one list");
        k = std::max(k, l.size());
    }
    CorrespondenceAssignment c(g, static_cast<int>(k));
    for (const Edge& e : g.edges())
        for (size_t i = 0; i < lists[e.u].size(); ++i)
            for (size_t j = 0; j < lists[e.v].size(); ++j)
                if (lists[e.u][i] == lists[e.v][j])
                    c.add_pair(e.u, e.v, static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return {static_cast<int>(k), std::move(c)};
}

CorrespondenceAssignment identity_assignment(const SimpleGraph& g, int k) {
    CorrespondenceAssignment c(g, k);
    for (const Edge& e : g.edges())
        for (int l = 1; l <= k; ++l) c.add_pair(e.u, e.v, l, l);
    return c;
}

CorrespondenceAssignment random_assignment(const SimpleGraph& g, int k, Rng& rng, bool perfect) {
    CorrespondenceAssignment c(g, k);
    for (const Edge& e : g.edges()) {
        std::vector<int> sigma(k);
        std::iota(sigma.begin(), sigma.end(), 1);
        rng.shuffle(sigma);
        for (int l = 1; l <= k; ++l) {
            if (!perfect && !rng.coin()) continue;
            c.add_pair(e.u, e.v, l, sigma[l - 1]);
        }
    }
    return c;
}

namespace {

void count_rec(const SimpleGraph& g, const CorrespondenceAssignment& c, Coloring& phi, int from,
               uint64_t& count) {
    int v = from;
    while (v < phi.size() && phi.colored(v)) ++v;
    if (v == phi.size()) {
        ++count;
        return;
    }
    for (int l : residual_list(g, c, phi, v)) {
        phi.label[v] = l;
        count_rec(g, c, phi, v + 1, count);
        phi.label[v] = 0;
    }
}

} // namespace

uint64_t count_colorings(const SimpleGraph& g, const CorrespondenceAssignment& c, const Coloring& phi0,
                         int max_n) {
    if (g.vertex_count() > max_n)
        fail(ErrorCode::TooLarge, "exhaustive count limited to " + std::to_string(max_n) + " vertices");
    require_internal(phi0.size() == g.vertex_count(), "precoloring size mismatch");
    if (!is_valid(g, c, phi0, false)) return 0;
    uint64_t count = 0;
    Coloring phi = phi0;
    count_rec(g, c, phi, 0, count);
    return count;
}

namespace {

std::vector<Edge> bfs_spanning_tree(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Edge> tree;
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int w : g.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = 1;
            tree.push_back(make_edge(v, w));
            queue.push_back(w);
        }
    }
    require_internal(static_cast<int>(tree.size()) == n - 1, "chi_dp requires a connected graph");
    return tree;
}

uint64_t ipow(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

ChiDpResult dp_chromatic_number(const SimpleGraph& g, int kmax, ChiDpMode mode, uint64_t seed, int samples) {
    require_internal(kmax >= 1, "kmax must be positive");
    std::vector<Edge> tree = bfs_spanning_tree(g);
    std::set<Edge> tset(tree.begin(), tree.end());
    std::vector<Edge> cotree;
    for (const Edge& e : g.edges())
        if (!tset.count(e)) cotree.push_back(e);

    ChiDpResult result;
    std::optional<CorrespondenceAssignment> last_witness;
    for (int k = 1; k <= kmax; ++k) {
        bool all_solvable = true;
        if (mode == ChiDpMode::Exhaustive) {
            uint64_t fact = 1;
            for (int i = 2; i <= k; ++i) fact *= i;
            if (g.vertex_count() > 12 || cotree.size() > 8 ||
                ipow(fact, cotree.size()) > 2'000'000ull)
                fail(ErrorCode::TooLarge, "exhaustive chi_DP enumeration out of reach for this graph");
            std::vector<std::vector<int>> perms;
            std::vector<int> p(k);
            std::iota(p.begin(), p.end(), 1);
            do perms.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));

            std::vector<size_t> odo(cotree.size(), 0);
            while (true) {
                CorrespondenceAssignment c(g, k);
                for (const Edge& e : tree)
                    for (int l = 1; l <= k; ++l) c.add_pair(e.u, e.v, l, l);
                for (size_t i = 0; i < cotree.size(); ++i)
                    for (int l = 1; l <= k; ++l) c.add_pair(cotree[i].u, cotree[i].v, l, perms[odo[i]][l - 1]);
                ++result.assignments_checked;
                if (!solve(g, c, Coloring(g.vertex_count()))) {
                    all_solvable = false;
                    last_witness = std::move(c);
                    break;
                }
                // advance odometer
                size_t pos = 0;
                while (pos < odo.size()) {
                    if (++odo[pos] < perms.size()) break;
                    odo[pos] = 0;
                    ++pos;
                }
                if (pos == odo.size()) break;
            }
        } else {
            Rng rng(seed ^ (static_cast<uint64_t>(k) << 32));
            for (int s = 0; s < samples; ++s) {
                CorrespondenceAssignment c = random_assignment(g, k, rng, true);
                ++result.assignments_checked;
                if (!solve(g, c, Coloring(g.vertex_count()))) {
                    all_solvable = false;
                    last_witness = std::move(c);
                    break;
                }
            }
        }
        if (all_solvable) {
            result.k = k;
            result.exact = mode == ChiDpMode::Exhaustive;
            result.witness = std::move(last_witness);
            return result;
        }
    }
    // every width up to kmax has a failing assignment; k = 0 flags "above kmax"
    result.k = 0;
    result.exact = false;
    result.witness = std::move(last_witness);
    return result;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

int to_int(const std::string& s) {
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

CorrespondenceAssignment parse_assignment(std::istream& in, const SimpleGraph& g) {
    std::string line;
    int k = -1;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() != 1) fail(ErrorCode::FormatError, "assignment header must be a single integer k");
        k = to_int(toks[0]);
        break;
    }
    if (k < 1) fail(ErrorCode::FormatError, "missing or invalid assignment width k");
    CorrespondenceAssignment c(g, k);
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() < 3 || toks[2] != ":")
            fail(ErrorCode::FormatError, "expected 'u v : a>b ...', got '" + line + "'");
        int u = to_int(toks[0]), v = to_int(toks[1]);
        if (!g.has_edge(u, v))
            fail(ErrorCode::FormatError, "assignment lists non-edge " + std::to_string(u) + "-" + std::to_string(v));
        for (size_t i = 3; i < toks.size(); ++i) {
            auto sep = toks[i].find('>');
            if (sep == std::string::npos) fail(ErrorCode::FormatError, "matched pair must look like a>b");
            c.add_pair(u, v, to_int(toks[i].substr(0, sep)), to_int(toks[i].substr(sep + 1)));
        }
    }
    return c;
}

CorrespondenceAssignment parse_assignment_string(const std::string& text, const SimpleGraph& g) {
    std::istringstream iss(text);
    return parse_assignment(iss, g);
}

std::string format_assignment(const CorrespondenceAssignment& c) {
    std::ostringstream out;
    out << c.k() << '\n';
    for (const Edge& e : c.entries()) {
        auto ps = c.pairs(e.u, e.v);
        if (ps.empty()) continue;
        out << e.u << ' ' << e.v << " :";
        for (auto [a, b] : ps) out << ' ' << a << '>' << b;
        out << '\n';
    }
    return out.str();
}

Coloring parse_coloring(std::istream& in, int n, int k) {
    Coloring phi(n);
    std::string line;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        for (const std::string& t : toks) {
            auto sep = t.find('=');
            if (sep == std::string::npos) fail(ErrorCode::FormatError, "coloring entries must look like v=c");
            int v = to_int(t.substr(0, sep));
            int c = to_int(t.substr(sep + 1));
            if (v < 0 || v >= n) fail(ErrorCode::FormatError, "coloring names out-of-range vertex " + std::to_string(v));
            if (c < 1 || c > k) fail(ErrorCode::FormatError, "coloring uses out-of-range label " + std::to_string(c));
            if (phi.label[v] != 0) fail(ErrorCode::FormatError, "vertex " + std::to_string(v) + " colored twice");
            phi.label[v] = c;
        }
    }
    return phi;
}

Coloring parse_coloring_string(const std::string& text, int n, int k) {
    std::istringstream iss(text);
    return parse_coloring(iss, n, k);
}

std::string format_coloring(const Coloring& phi) {
    std::ostringstream out;
    for (int v = 0; v < phi.size(); ++v)
        if (phi.colored(v)) out << v << '=' << phi.label[v] << '\n';
    return out.str();
}

} // namespace dpc
