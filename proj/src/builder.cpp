#include "flatbst/builder.hpp"

#include <cassert>
#include <stdexcept>

#include "flatbst/bitops.hpp"

namespace flatbst {

node_index parent_rule(node_index j) noexcept {
    const std::uint64_t b = pow2_trailing(j);  // 2^level(j)
    return ((j & (b << 1)) == 0) ? j + b : j - b;
}

namespace detail {

void finish_links(tree_arrays& tree, build_stats* stats) {
    const std::uint64_t n = tree.n;
    assert(n >= 1);
    node_index* p = tree.parent ? tree.parent->data() : nullptr;

    const node_index last = n - 1;
    tree.right[last] = npos;
    const node_index t = root_index(n);
    tree.root = t;
    if (p) p[t] = npos;

    // Glue walk. k scans the bits of last - t from the root's level downward;
    // each 0-run "right then down-lefts through missing nodes" collapses into
    // one edge from the current path node j to j + k.
    std::uint64_t k = pow2_trailing(t);
    const std::uint64_t stop = pow2_trailing(last);
    node_index j = t;
    while (k > stop) {
        k >>= 1;
        if (((last - t) & k) == 0) {
            k >>= 1;
            while (((last - t) & k) == 0) k >>= 1;
            tree.right[j] = j + k;
            if (p) p[j + k] = j;
        }
        j += k;
        if (stats) ++stats->glue_iterations;
    }
}

}  // namespace detail

tree_arrays build_perfect(unsigned k, build_options opts) {
    if (k == 0) return build(0, opts);
    if (k > 62) throw std::length_error("build_perfect: depth above 62");
    const std::uint64_t n = (std::uint64_t{1} << k) - 1;

    tree_arrays out;
    out.n = n;
    out.source = provenance::fresh_build;
    out.left.assign(n, npos);
    out.right.assign(n, npos);
    node_index* p = nullptr;
    if (opts.store_parents) {
        out.parent.emplace(n, npos);
        p = out.parent->data();
    }

    for (std::uint64_t j = 0; j < n; ++j) {
        const std::uint64_t b = pow2_trailing(j);
        if (p) p[j] = ((j & (b << 1)) == 0) ? j + b : j - b;
        if (b > 1) {  // level >= 1: odd index, internal node
            out.left[j] = j - (b >> 1);
            out.right[j] = j + (b >> 1);
        }
    }
    out.root = (std::uint64_t{1} << (k - 1)) - 1;
    if (p) p[out.root] = npos;
    return out;
}

tree_arrays build(std::uint64_t n, build_options opts, build_stats* stats) {
    if (n > max_node_count) throw std::length_error("build: n above 2^63");

    tree_arrays out;
    out.n = n;
    out.source = provenance::fresh_build;
    if (opts.store_parents) out.parent.emplace(n, npos);
    if (n == 0) return out;
    out.left.assign(n, npos);
    out.right.assign(n, npos);
    node_index* p = out.parent ? out.parent->data() : nullptr;

    // One fused pass instead of separate even/odd loops: each array cache
    // line is touched once. Cell values are identical either way, since
    // iteration j writes only the cells at index j.
    node_index* l = out.left.data();
    node_index* r = out.right.data();
    for (std::uint64_t j = 0; j < n; ++j) {
        const std::uint64_t b = pow2_trailing(j);
        if (p) p[j] = ((j & (b << 1)) == 0) ? j + b : j - b;
        if (b > 1) {  // odd index: level >= 1, children at distance 2^(level-1)
            l[j] = j - (b >> 1);
            r[j] = j + (b >> 1);
        } else {  // even index: level 0, leaf
            l[j] = npos;
            r[j] = npos;
        }
        if (stats) ++stats->pass_iterations;
    }

    detail::finish_links(out, stats);
    return out;
}

}  // namespace flatbst
