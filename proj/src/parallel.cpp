#include "flatbst/parallel.hpp"

#include <cstdint>
#include <stdexcept>

#include "flatbst/bitops.hpp"
#include "flatbst/builder.hpp"

namespace flatbst {

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranges(
    std::uint64_t n, unsigned workers) {
    if (workers == 0) throw std::invalid_argument("partition_ranges: 0 workers");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    ranges.reserve(workers);
    const std::uint64_t base = n / workers;
    const std::uint64_t rem = n % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t len = base + (w < rem ? 1 : 0);
        ranges.emplace_back(begin, begin + len);
        begin += len;
    }
    return ranges;
}

namespace {

// Fused per-index kernel over [begin, end): parent, left, right of node j
// from the perfect-tree formulas. Writes only cells inside the range.
void fill_range(node_index* left, node_index* right, node_index* parent,
                std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t j = begin; j < end; ++j) {
        const std::uint64_t b = pow2_trailing(j);
        if (parent) parent[j] = ((j & (b << 1)) == 0) ? j + b : j - b;
        if (b > 1) {
            left[j] = j - (b >> 1);
            right[j] = j + (b >> 1);
        } else {
            left[j] = npos;
            right[j] = npos;
        }
    }
}

}  // namespace

tree_arrays build_parallel(std::uint64_t n, build_options opts,
                           unsigned workers) {
    if (workers == 0) throw std::invalid_argument("build_parallel: 0 workers");
    if (n > max_node_count) throw std::length_error("build_parallel: n above 2^63");

    tree_arrays out;
    out.n = n;
    out.source = provenance::fresh_build;
    if (opts.store_parents) out.parent.emplace(n, npos);
    if (n == 0) return out;
    out.left.assign(n, npos);
    out.right.assign(n, npos);

    const auto ranges = partition_ranges(n, workers);
    node_index* left = out.left.data();
    node_index* right = out.right.data();
    node_index* parent = out.parent ? out.parent->data() : nullptr;

    const int nranges = static_cast<int>(ranges.size());
#pragma omp parallel for num_threads(nranges) schedule(static)
    for (int w = 0; w < nranges; ++w) {
        fill_range(left, right, parent, ranges[w].first, ranges[w].second);
    }

    // Sequential tail: root fix and glue touch cells owned by arbitrary
    // ranges, so they must run after the join above.
    detail::finish_links(out, nullptr);
    return out;
}

}  // namespace flatbst
