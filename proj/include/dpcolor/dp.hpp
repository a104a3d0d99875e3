#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/graph.hpp"
#include "dpcolor/rng.hpp"

namespace dpc {

// Partial or total labeling. Labels are 1-based in [k], 0 means uncolored.
struct Coloring {
    std::vector<int> label;

    Coloring() = default;
    explicit Coloring(int n) : label(n, 0) {}

    int size() const { return static_cast<int>(label.size()); }
    bool colored(int v) const { return label[v] != 0; }
    bool total() const;
};

// A k-correspondence assignment: width k plus one matching per edge, stored under the
// canonical endpoint order. A matching maps each left label to at most one right label
// and vice versa; missing pairs mean "no constraint".
class CorrespondenceAssignment {
public:
    CorrespondenceAssignment() = default;
    CorrespondenceAssignment(const SimpleGraph& g, int k);

    int k() const { return k_; }
    bool has_entry(int u, int v) const;

    // Adds (cu, cv) to the matching of edge uv; rejects matching-property violations.
    void add_pair(int u, int v, int cu, int cv);

    // Label at v matched with (u, cu), or 0.
    int match(int u, int v, int cu) const;

    // Matched pairs in u -> v direction, ascending by the u label.
    std::vector<std::pair<int, int>> pairs(int u, int v) const;

    bool straight(int u, int v) const;

    // Edges with an entry, canonical order, sorted.
    std::vector<Edge> entries() const;

private:
    struct Matching {
        std::vector<int> fwd; // label at min endpoint -> label at max endpoint, 0 = none
        std::vector<int> bwd;
    };
    const Matching& entry(int u, int v) const;
    Matching& entry_mut(int u, int v);

    int k_ = 0;
    std::map<Edge, Matching> matchings_;
};

// Per-vertex label permutations; renaming v's labels maps a coloring phi of the
// original assignment to perm[v][phi(v)] in the renamed one.
struct RelabelPlan {
    int k = 0;
    std::vector<std::vector<int>> perm; // perm[v][old] = new, index 0 unused

    Coloring apply(const Coloring& phi) const;
    Coloring undo(const Coloring& phi) const;
};

// True iff no edge with both ends colored picks a matched pair. require_total also
// demands every vertex be colored.
bool is_valid(const SimpleGraph& g, const CorrespondenceAssignment& c, const Coloring& phi, bool require_total);

// Labels for x compatible with all currently colored neighbors.
std::vector<int> residual_list(const SimpleGraph& g, const CorrespondenceAssignment& c, const Coloring& phi, int x);

// Backtracking extension of phi0 to a total valid coloring; std::nullopt means no
// extension exists. Deterministic: fail-first vertex order, ascending labels.
std::optional<Coloring> solve(const SimpleGraph& g, const CorrespondenceAssignment& c, const Coloring& phi0);

struct StraightenResult {
    CorrespondenceAssignment assignment;
    RelabelPlan plan;
};

// Renames labels so every edge of the given forest becomes straight. Colorings of the
// input and output assignments are in bijection via the plan.
StraightenResult straighten(const SimpleGraph& g, const CorrespondenceAssignment& c, const std::vector<Edge>& forest);

// Embeds a list-coloring instance: label i at v stands for the i-th color of v's list,
// matchings link positions naming the same color, labels past a list's length are
// matched to nothing. With equal-size lists the conflict structure is preserved
// exactly, so a valid coloring avoiding padded labels exists iff an L-coloring does.
std::pair<int, CorrespondenceAssignment> from_list_assignment(const SimpleGraph& g,
                                                              const std::vector<std::vector<int>>& lists);

CorrespondenceAssignment identity_assignment(const SimpleGraph& g, int k);
// perfect: a uniformly random permutation matching per edge; otherwise a random
// sub-matching of one.
CorrespondenceAssignment random_assignment(const SimpleGraph& g, int k, Rng& rng, bool perfect);

// Exact number of total valid colorings extending phi0, by exhaustive search.
// Guarded: vertex count above max_n is refused.
uint64_t count_colorings(const SimpleGraph& g, const CorrespondenceAssignment& c, const Coloring& phi0,
                         int max_n = 12);

enum class ChiDpMode { Exhaustive, Sampled };

struct ChiDpResult {
    int k = 0;           // smallest width with no failing assignment found
    bool exact = false;  // true only in exhaustive mode
    // failing assignment at width k-1 (absent when k-1 admits none, i.e. k == 1)
    std::optional<CorrespondenceAssignment> witness;
    uint64_t assignments_checked = 0;
};

// Exhaustive mode enumerates assignments with a spanning tree pinned straight
// (identity) and every non-tree edge running over all k! permutation matchings;
// sub-matchings never constrain more than a permutation, so this covers all
// assignments up to renaming. Sampled mode only tests `samples` random perfect
// assignments per width and reports a lower-bound estimate.
ChiDpResult dp_chromatic_number(const SimpleGraph& g, int kmax, ChiDpMode mode, uint64_t seed = 0,
                                int samples = 200);

// Text formats. Assignment:
//   line 1: k
//   one line per edge: "u v : a1>b1 a2>b2 ..." (absent edges default to empty matchings)
// Coloring: "v=c" lines.
CorrespondenceAssignment parse_assignment(std::istream& in, const SimpleGraph& g);
CorrespondenceAssignment parse_assignment_string(const std::string& text, const SimpleGraph& g);
std::string format_assignment(const CorrespondenceAssignment& c);
Coloring parse_coloring(std::istream& in, int n, int k);
Coloring parse_coloring_string(const std::string& text, int n, int k);
std::string format_coloring(const Coloring& phi);

} // namespace dpc
