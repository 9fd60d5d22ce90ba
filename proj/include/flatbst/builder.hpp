// Single-pass construction of minimal-height BSTs from sorted ranks.
//
// build_perfect() handles the perfect sizes n = 2^K - 1, where the child and
// parent links follow directly from the bit formulas. build() handles any n:
// it fills the arrays with the perfect-tree formulas in one pass over [0, n)
// and then walks the descending path from the root toward node n-1, gluing
// each subpath that runs through missing (>= n) indices into a single edge.
// The glue walk is O(log n); no auxiliary memory grows with n.
#pragma once

#include <cstdint>

#include "flatbst/tree.hpp"

namespace flatbst {

// Operation counters for the debug harness; pass to build() to record work.
struct build_stats {
    std::uint64_t pass_iterations = 0;  // per-index loop trips, must equal n
    std::uint64_t glue_iterations = 0;  // glue walk trips, at most msb(n)
};

// Parent of node j inside the perfect tree containing it: j +- 2^level(j),
// with the sign decided by bit level(j)+1 of j. Callers special-case roots.
node_index parent_rule(node_index j) noexcept;

// Perfect tree on n = 2^K - 1 nodes. K = 0 gives the empty tree; K > 62
// throws std::length_error.
tree_arrays build_perfect(unsigned k, build_options opts = {});

// Minimal-height tree on n nodes for any n <= 2^63.
tree_arrays build(std::uint64_t n, build_options opts = {},
                  build_stats* stats = nullptr);

namespace detail {

// Shared tail of the build: clears the last node's right edge, installs the
// root, and glues edges that would point past n-1. Runs after every cell of
// the arrays has been filled with the perfect-tree formulas.
void finish_links(tree_arrays& tree, build_stats* stats);

}  // namespace detail

}  // namespace flatbst
