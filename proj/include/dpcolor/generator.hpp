#pragma once

#include <cstdint>

#include "dpcolor/plane_graph.hpp"

namespace dpc {

// Seeded random plane graph passing class_check: grows a random stacked triangulation
// to n vertices, then deletes one edge of each class witness (an edge of the offending
// 4-cycle) until the check passes. Deletions only remove cycle edges, so the graph
// stays connected and simple; the vertex count is exactly n. The outer face is set to
// a seeded face of minimum degree.
PlaneGraph gen_in_class(int n, uint64_t seed);

} // namespace dpc
