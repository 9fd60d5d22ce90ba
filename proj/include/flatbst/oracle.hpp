// Independent baselines and structural validators used to check the fast
// builders: a classic recursive-halving builder, whole-tree validation
// (ordering, links, height, level fullness), and a machine check that every
// perfect-tree edge pointing past the last node originates on the last
// node's ascending path -- the property the glue pass relies on.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flatbst/tree.hpp"

namespace flatbst {

// Node count per depth, root at depth 0.
using level_profile = std::vector<std::uint64_t>;

enum class violation_kind : std::uint8_t {
    order,   // child on the wrong side of its parent, or in-order broken
    link,    // child/parent cross-reference mismatch, out-of-range or orphan
    root,    // zero or multiple roots, or root index invalid
    height,  // taller than the minimal height
    cycle,   // a node reachable twice
};

struct validation_report {
    bool bst_order_ok = true;
    bool links_consistent = true;
    bool single_root = true;
    bool minimal_height_ok = true;
    bool upper_levels_full = true;  // descriptive: complete-form indicator
    std::int64_t height_edges = -1;
    level_profile levels;
    std::vector<std::pair<node_index, violation_kind>> violations;

    // upper_levels_full and height_edges describe the shape; they are not
    // pass/fail checks (freshly built trees are minimal but rarely complete).
    bool ok() const noexcept {
        return bst_order_ok && links_consistent && single_root &&
               minimal_height_ok;
    }
};

// Recursive midpoint baseline: root at (lo+hi)/2 of each inclusive index
// range. Minimal height, independent of the bit-formula builders.
tree_arrays build_halving(std::uint64_t n, build_options opts = {});

// Full structural audit. Problems never throw; they land in the report.
validation_report validate(const tree_arrays& tree);

// Nodes per depth of a well-formed tree.
level_profile level_profile_of(const tree_arrays& tree);

// Longest root-to-leaf path in edges; throws std::runtime_error on a cycle.
unsigned height_of(const tree_arrays& tree);

enum class edge_kind : std::uint8_t { up, down_right };

struct dangling_edge {
    node_index from = npos;
    node_index to = npos;
    edge_kind kind = edge_kind::up;
    bool exempt = false;   // the last node's own down-right edge
    bool on_path = false;  // from lies on the last node's ascending path
};

struct dangling_edge_report {
    std::vector<dangling_edge> edges;
    bool localized = true;  // every non-exempt edge starts on that path
};

// Applies the perfect-tree link formulas verbatim to nodes 0..n-1 and
// collects every edge whose target exceeds n-1, checking that each one
// (except the last node's down-right edge) originates on the ascending path
// from node n-1 to the root of the same-height perfect tree.
dangling_edge_report dangling_edges(std::uint64_t n);

}  // namespace flatbst
