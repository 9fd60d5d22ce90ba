// Virtual-tree navigation: the builder's tree can be walked with index
// arithmetic alone, so searching a sorted array needs no construction at
// all. A child candidate past the last index is repaired by descending left
// until a present node appears, mirroring what the glue pass records.
#pragma once

#include <cassert>
#include <cstdint>
#include <span>

#include "flatbst/bitops.hpp"
#include "flatbst/tree.hpp"

namespace flatbst {

// Left child of j in the n-node tree, npos for leaves. Never missing: the
// left child is always smaller than j.
inline node_index implicit_left(node_index j, std::uint64_t n) noexcept {
    assert(j < n);
    (void)n;
    const std::uint64_t b = pow2_trailing(j);
    return (b > 1) ? j - (b >> 1) : npos;
}

// Right child of j in the n-node tree. The perfect-tree candidate j + 2^(L-1)
// may exceed n-1; descend left from it until a present index survives.
// Matches right[j] of the built tree at every node reachable from its root.
inline node_index implicit_right(node_index j, std::uint64_t n) noexcept {
    assert(j < n);
    const std::uint64_t b = pow2_trailing(j);
    if (b == 1) return npos;
    node_index i = j + (b >> 1);
    while (i > n - 1) {
        const std::uint64_t bi = pow2_trailing(i);
        if (bi == 1) return npos;
        i -= bi >> 1;
    }
    return i;
}

struct search_outcome {
    bool found = false;
    node_index index = npos;
    std::uint64_t comparisons = 0;  // examined nodes; at most msb(n) + 1
};

// Search a sorted array as if it were the built tree. Each examined node
// costs one three-way comparison; the path length is bounded by the minimal
// height, so comparisons never exceed msb(n) + 1.
template <typename K>
search_outcome search(std::span<const K> keys, const K& target) {
    const std::uint64_t n = keys.size();
    search_outcome out;
    if (n == 0) return out;
    node_index j = root_index(n);
    while (j != npos) {
        ++out.comparisons;
        if (target < keys[j]) {
            j = implicit_left(j, n);
        } else if (keys[j] < target) {
            j = implicit_right(j, n);
        } else {
            out.found = true;
            out.index = j;
            return out;
        }
    }
    return out;
}

}  // namespace flatbst
