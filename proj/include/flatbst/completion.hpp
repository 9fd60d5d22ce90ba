// Rotation pass that rewrites fresh builder output into a complete tree:
// every depth above the deepest holds its full 2^d nodes, the height stays
// minimal, and the in-order sequence is untouched. The pass walks the
// down-right spine once, so it costs O(log n) single rotations.
#pragma once

#include <cstdint>

#include "flatbst/tree.hpp"

namespace flatbst {

struct completion_stats {
    std::uint64_t rotations = 0;  // at most msb(n)
};

// Height, counted in levels (nodes, not edges), of the right subtree of a
// node j on the down-right spine of fresh builder output for n nodes:
// 0 when j is the last node, else msb(n-1-j) + 1.
unsigned right_subtree_levels(node_index j, std::uint64_t n);

// In-place rewrite; requires tree.source == provenance::fresh_build and
// throws std::logic_error otherwise (the closed form behind
// right_subtree_levels only holds for that shape). The root may change.
void make_complete(tree_arrays& tree, completion_stats* stats = nullptr);

}  // namespace flatbst
