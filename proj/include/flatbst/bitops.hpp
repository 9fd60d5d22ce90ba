// Level and most-significant-bit arithmetic underneath the tree builders.
//
// The level of a node index j -- its distance to the leaf layer in a perfect
// tree -- equals the number of trailing one-bits of j, and is intrinsic to
// the index: it does not depend on the tree size. Everything here is a pure
// function of its arguments.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "flatbst/tree.hpp"

namespace flatbst {

// Level of node j: count of trailing one-bits. Requires j < 2^63 so the
// binary representation always contains a zero within the word.
inline unsigned trailing_ones_level(std::uint64_t j) noexcept {
    return static_cast<unsigned>(std::countr_one(j));
}

// 2^level(j) via the isolate-lowest-set-bit identity on j+1. Negation of an
// unsigned value is its two's complement, which is exactly what is needed.
inline std::uint64_t pow2_trailing(std::uint64_t j) noexcept {
    const std::uint64_t s = j + 1;
    return s & (0 - s);
}

// Position of the most significant one-bit (bit 0 = least significant).
inline unsigned msb(std::uint64_t j) {
    if (j == 0) throw std::domain_error("msb: no set bit in 0");
    return static_cast<unsigned>(std::bit_width(j)) - 1u;
}

// Root of the tree the builders produce for n nodes: 2^msb(n) - 1.
// npos for the empty tree.
inline node_index root_index(std::uint64_t n) {
    if (n == 0) return npos;
    return (std::uint64_t{1} << msb(n)) - 1;
}

// Loop fallbacks. Kept as the reference the <bit> paths are tested against,
// and usable on targets without cheap find-first-set.
namespace portable {

inline unsigned trailing_ones_level(std::uint64_t j) noexcept {
    unsigned k = 0;
    while (j & 1u) {
        j >>= 1;
        ++k;
    }
    return k;
}

inline std::uint64_t pow2_trailing(std::uint64_t j) noexcept {
    return std::uint64_t{1} << trailing_ones_level(j);
}

inline unsigned msb(std::uint64_t j) {
    if (j == 0) throw std::domain_error("msb: no set bit in 0");
    unsigned k = 0;
    while (j >>= 1) ++k;
    return k;
}

}  // namespace portable

}  // namespace flatbst
