// OpenMP-parallel variant of the builder. The per-index pass is embarrassingly
// parallel -- iteration j writes only the cells at index j -- so the array is
// split into contiguous near-equal ranges filled independently. The glue walk
// is inherently sequential (O(log n)) and runs after all ranges are done.
// Output is element-wise identical to the serial build for every worker count.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flatbst/tree.hpp"

namespace flatbst {

// Contiguous disjoint ranges [begin, end) covering [0, n), one per worker,
// sizes differing by at most one with the remainder on the first ranges.
std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranges(
    std::uint64_t n, unsigned workers);

// build() with the per-index pass distributed over `workers` OpenMP threads.
// workers == 0 throws std::invalid_argument.
tree_arrays build_parallel(std::uint64_t n, build_options opts,
                           unsigned workers);

}  // namespace flatbst
