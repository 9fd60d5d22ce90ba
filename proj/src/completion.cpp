#include "flatbst/completion.hpp"

#include <cassert>
#include <stdexcept>

#include "flatbst/bitops.hpp"

namespace flatbst {

unsigned right_subtree_levels(node_index j, std::uint64_t n) {
    assert(n >= 1 && j <= n - 1);
    if (j == n - 1) return 0;
    return msb(n - 1 - j) + 1;
}

void make_complete(tree_arrays& tree, completion_stats* stats) {
    if (tree.source != provenance::fresh_build) {
        throw std::logic_error(
            "make_complete: requires fresh builder output");
    }
    tree.source = provenance::completed;
    const std::uint64_t n = tree.n;
    if (n <= 3) return;  // already complete, and too small for the spine walk

    node_index* p = tree.parent ? tree.parent->data() : nullptr;

    // Promote x's left child above x. z is the spine node above x, ignored
    // when x is still the root.
    const auto rotate = [&](node_index x, node_index z, bool promote_to_root) {
        const node_index y = tree.left[x];
        assert(y != npos);
        if (promote_to_root) {
            tree.root = y;
            if (p) p[y] = npos;
        } else {
            if (p) p[y] = z;
            tree.right[z] = y;
        }
        tree.left[x] = tree.right[y];
        assert(tree.left[x] != npos);
        if (p) p[tree.left[x]] = x;
        tree.right[y] = x;
        if (p) p[x] = y;
        if (stats) ++stats->rotations;
        return y;
    };

    node_index x = tree.root;
    node_index z = npos;
    unsigned h = trailing_ones_level(x);  // level of the root, equals msb(n)
    bool at_root = true;
    while (h > 1) {
        if (right_subtree_levels(x, n) < h) {
            z = rotate(x, z, at_root);
        } else {
            z = x;
            x = tree.right[x];
        }
        at_root = false;
        --h;
    }
}

}  // namespace flatbst
