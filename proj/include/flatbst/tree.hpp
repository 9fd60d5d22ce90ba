// Core types for flat, array-based binary search trees over key ranks.
// A tree on n nodes is stored as left/right (and optionally parent) index
// arrays; node index i carries the i-th smallest key, so the in-order
// traversal of a well-formed tree is exactly 0, 1, ..., n-1.
#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace flatbst {

using node_index = std::uint64_t;

// Sentinel for "no node". Lies outside [0, 2^63], the valid index range.
inline constexpr node_index npos = std::numeric_limits<node_index>::max();

// Largest supported node count; keeps j+1 and index arithmetic inside the
// 64-bit word for every node index j.
inline constexpr std::uint64_t max_node_count = std::uint64_t{1} << 63;

// How a tree_arrays instance was produced. The rotation pass relies on a
// structural property of fresh builder output and refuses anything else.
enum class provenance : std::uint8_t {
    fresh_build,  // straight out of build()/build_parallel()/build_perfect()
    completed,    // rewritten by make_complete()
    foreign,      // halving baseline, deserialized files, hand-made fixtures
};

struct build_options {
    bool store_parents = true;
};

struct tree_arrays {
    std::uint64_t n = 0;
    node_index root = npos;
    std::vector<node_index> left;
    std::vector<node_index> right;
    std::optional<std::vector<node_index>> parent;
    provenance source = provenance::foreign;

    bool has_parents() const noexcept { return parent.has_value(); }

    friend bool operator==(const tree_arrays& a, const tree_arrays& b) noexcept {
        return a.n == b.n && a.root == b.root && a.left == b.left &&
               a.right == b.right && a.parent == b.parent;
    }
};

// Minimal possible height in edges for n nodes: ceil(log2(n+1)) - 1.
// The empty tree has height -1.
inline std::int64_t minimal_height_edges(std::uint64_t n) noexcept {
    return static_cast<std::int64_t>(std::bit_width(n)) - 1;
}

}  // namespace flatbst
