// Test-only reference implementations, deliberately written the slow and
// obvious way and kept independent of the library code they check.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flatbst/tree.hpp"

namespace testor {

// Count trailing one-bits by stripping them one at a time.
inline unsigned naive_trailing_ones(std::uint64_t j) {
    unsigned k = 0;
    while ((j & 1u) == 1u) {
        j >>= 1u;
        ++k;
    }
    return k;
}

// Most significant set bit position by scanning from the top.
inline unsigned naive_msb(std::uint64_t j) {
    for (unsigned pos = 63;; --pos) {
        if (j & (std::uint64_t{1} << pos)) return pos;
    }
}

// In-order node sequence by recursive traversal.
inline void inorder_rec(const flatbst::tree_arrays& t, flatbst::node_index j,
                        std::vector<flatbst::node_index>& out) {
    if (j == flatbst::npos) return;
    inorder_rec(t, t.left[j], out);
    out.push_back(j);
    inorder_rec(t, t.right[j], out);
}

inline std::vector<flatbst::node_index> inorder_of(const flatbst::tree_arrays& t) {
    std::vector<flatbst::node_index> out;
    inorder_rec(t, t.root, out);
    return out;
}

// Height of the subtree rooted at j, in levels (node-count sense); 0 for the
// empty subtree.
inline std::uint64_t measured_levels(const flatbst::tree_arrays& t,
                                     flatbst::node_index j) {
    if (j == flatbst::npos) return 0;
    const std::uint64_t l = measured_levels(t, t.left[j]);
    const std::uint64_t r = measured_levels(t, t.right[j]);
    return 1 + (l > r ? l : r);
}

// Every node reachable from the root, preorder.
inline std::vector<flatbst::node_index> reachable_of(const flatbst::tree_arrays& t) {
    std::vector<flatbst::node_index> out;
    std::vector<flatbst::node_index> stack;
    if (t.root != flatbst::npos) stack.push_back(t.root);
    while (!stack.empty()) {
        const flatbst::node_index j = stack.back();
        stack.pop_back();
        out.push_back(j);
        if (t.left[j] != flatbst::npos) stack.push_back(t.left[j]);
        if (t.right[j] != flatbst::npos) stack.push_back(t.right[j]);
    }
    return out;
}

// Straight transcription of the builder as two parity-separated passes plus
// the sequential tail, used to pin down the fused production pass.
inline flatbst::tree_arrays two_loop_build(std::uint64_t n) {
    using flatbst::npos;
    flatbst::tree_arrays out;
    out.n = n;
    out.source = flatbst::provenance::fresh_build;
    out.parent.emplace(n, npos);
    if (n == 0) return out;
    out.left.assign(n, npos);
    out.right.assign(n, npos);
    auto& p = *out.parent;
    const auto parent_of = [](std::uint64_t j) -> std::uint64_t {
        std::uint64_t b = 1;
        while (j & b) b <<= 1;  // b = 2^level(j)
        return ((j & (b << 1)) == 0) ? j + b : j - b;
    };
    for (std::uint64_t j = 0; j < n; j += 2) {
        p[j] = parent_of(j);
        out.left[j] = npos;
        out.right[j] = npos;
    }
    for (std::uint64_t j = 1; j < n; j += 2) {
        std::uint64_t b = 1;
        while (j & b) b <<= 1;
        p[j] = parent_of(j);
        out.left[j] = j - (b >> 1);
        out.right[j] = j + (b >> 1);
    }
    out.right[n - 1] = npos;
    std::uint64_t t = 1;
    while (t * 2 <= n) t *= 2;  // t = 2^msb(n) after the loop, then root below
    t -= 1;
    out.root = t;
    p[t] = npos;

    std::uint64_t k = t + 1;  // 2^level(t)
    std::uint64_t stop = 1;
    while ((n - 1) & stop) stop <<= 1;  // 2^level(n-1)
    std::uint64_t j = t;
    while (k > stop) {
        k /= 2;
        if (((n - 1 - t) & k) == 0) {
            k /= 2;
            while (((n - 1 - t) & k) == 0) k /= 2;
            out.right[j] = j + k;
            p[j + k] = j;
        }
        j += k;
    }
    return out;
}

// Classic binary search over a sorted vector; index of some equal element.
inline std::optional<std::uint64_t> classic_search(
    const std::vector<std::int64_t>& keys, std::int64_t target) {
    std::uint64_t lo = 0;
    std::uint64_t hi = keys.size();
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (keys[mid] == target) return mid;
        if (keys[mid] < target) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return std::nullopt;
}

}  // namespace testor
