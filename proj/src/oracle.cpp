#include "flatbst/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "flatbst/bitops.hpp"
#include "flatbst/builder.hpp"

namespace flatbst {

tree_arrays build_halving(std::uint64_t n, build_options opts) {
    if (n > max_node_count) throw std::length_error("build_halving: n above 2^63");

    tree_arrays out;
    out.n = n;
    out.source = provenance::foreign;
    if (opts.store_parents) out.parent.emplace(n, npos);
    if (n == 0) return out;
    out.left.assign(n, npos);
    out.right.assign(n, npos);
    node_index* p = out.parent ? out.parent->data() : nullptr;

    // Midpoint of the inclusive range [lo, hi] becomes the subtree root.
    auto rec = [&](auto&& self, std::uint64_t lo, std::uint64_t hi) -> node_index {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (mid > lo) {
            out.left[mid] = self(self, lo, mid - 1);
            if (p) p[out.left[mid]] = mid;
        }
        if (mid < hi) {
            out.right[mid] = self(self, mid + 1, hi);
            if (p) p[out.right[mid]] = mid;
        }
        return mid;
    };
    out.root = rec(rec, 0, n - 1);
    if (p) p[out.root] = npos;
    return out;
}

namespace {

// Iterative traversal computing per-node depth. Returns false on a cycle or
// an out-of-range child; `depth` holds npos for unreached nodes.
bool compute_depths(const tree_arrays& tree, std::vector<std::uint64_t>& depth) {
    const std::uint64_t n = tree.n;
    depth.assign(n, npos);
    if (n == 0 || tree.root >= n) return true;
    bool clean = true;
    std::vector<node_index> stack;
    stack.push_back(tree.root);
    depth[tree.root] = 0;
    while (!stack.empty()) {
        const node_index j = stack.back();
        stack.pop_back();
        for (const node_index c : {tree.left[j], tree.right[j]}) {
            if (c == npos) continue;
            if (c >= n || depth[c] != npos) {
                clean = false;
                continue;
            }
            depth[c] = depth[j] + 1;
            stack.push_back(c);
        }
    }
    return clean;
}

}  // namespace

validation_report validate(const tree_arrays& tree) {
    validation_report rep;
    const std::uint64_t n = tree.n;
    const auto flag = [&rep](bool& field, node_index j, violation_kind k) {
        field = false;
        rep.violations.emplace_back(j, k);
    };

    if (n == 0) {
        if (tree.root != npos) flag(rep.single_root, tree.root, violation_kind::root);
        return rep;
    }
    if (tree.left.size() != n || tree.right.size() != n ||
        (tree.parent && tree.parent->size() != n)) {
        flag(rep.links_consistent, npos, violation_kind::link);
        return rep;
    }
    if (tree.root >= n) {
        flag(rep.single_root, tree.root, violation_kind::root);
        return rep;
    }

    // Reachability and depths; cycles surface as re-visited nodes.
    std::vector<std::uint64_t> depth;
    if (!compute_depths(tree, depth)) {
        // Re-walk to attribute the failures to nodes.
        std::vector<std::uint8_t> seen(n, 0);
        std::vector<node_index> stack{tree.root};
        seen[tree.root] = 1;
        while (!stack.empty()) {
            const node_index j = stack.back();
            stack.pop_back();
            for (const node_index c : {tree.left[j], tree.right[j]}) {
                if (c == npos) continue;
                if (c >= n) {
                    flag(rep.links_consistent, j, violation_kind::link);
                } else if (seen[c]) {
                    flag(rep.links_consistent, c, violation_kind::cycle);
                } else {
                    seen[c] = 1;
                    stack.push_back(c);
                }
            }
        }
    }
    for (std::uint64_t j = 0; j < n; ++j) {
        if (depth[j] == npos) flag(rep.links_consistent, j, violation_kind::link);
    }

    // Local child ordering: left strictly below, right strictly above.
    for (std::uint64_t j = 0; j < n; ++j) {
        const node_index l = tree.left[j];
        const node_index r = tree.right[j];
        if (l != npos && l < n && l >= j) flag(rep.bst_order_ok, j, violation_kind::order);
        if (r != npos && r < n && r <= j) flag(rep.bst_order_ok, j, violation_kind::order);
    }

    // Global in-order identity (index == rank), only sound without cycles.
    if (rep.links_consistent) {
        std::vector<node_index> stack;
        node_index cur = tree.root;
        std::uint64_t expect = 0;
        while (cur != npos || !stack.empty()) {
            while (cur != npos) {
                stack.push_back(cur);
                cur = tree.left[cur];
            }
            cur = stack.back();
            stack.pop_back();
            if (cur != expect) {
                flag(rep.bst_order_ok, cur, violation_kind::order);
                break;
            }
            ++expect;
            cur = tree.right[cur];
        }
    }

    // Parent/child cross-links; with no parent array, fall back to indegrees.
    if (tree.parent) {
        const auto& p = *tree.parent;
        std::uint64_t roots = 0;
        for (std::uint64_t j = 0; j < n; ++j) {
            if (p[j] == npos) {
                ++roots;
                if (j != tree.root) flag(rep.single_root, j, violation_kind::root);
                continue;
            }
            if (p[j] >= n || (tree.left[p[j]] != j && tree.right[p[j]] != j)) {
                flag(rep.links_consistent, j, violation_kind::link);
            }
        }
        if (roots != 1) flag(rep.single_root, tree.root, violation_kind::root);
        for (std::uint64_t j = 0; j < n; ++j) {
            for (const node_index c : {tree.left[j], tree.right[j]}) {
                if (c != npos && c < n && p[c] != j) {
                    flag(rep.links_consistent, c, violation_kind::link);
                }
            }
        }
    } else {
        std::vector<std::uint8_t> indegree(n, 0);
        for (std::uint64_t j = 0; j < n; ++j) {
            for (const node_index c : {tree.left[j], tree.right[j]}) {
                if (c != npos && c < n && indegree[c] < 2) ++indegree[c];
            }
        }
        for (std::uint64_t j = 0; j < n; ++j) {
            if (indegree[j] == 0 && j != tree.root) {
                flag(rep.single_root, j, violation_kind::root);
            }
        }
        if (indegree[tree.root] != 0) {
            flag(rep.single_root, tree.root, violation_kind::root);
        }
    }

    // Height and per-depth population over the reached nodes.
    std::uint64_t height = 0;
    for (std::uint64_t j = 0; j < n; ++j) {
        if (depth[j] != npos) height = std::max(height, depth[j]);
    }
    rep.height_edges = static_cast<std::int64_t>(height);
    if (rep.height_edges != minimal_height_edges(n)) {
        flag(rep.minimal_height_ok, tree.root, violation_kind::height);
    }
    rep.levels.assign(height + 1, 0);
    for (std::uint64_t j = 0; j < n; ++j) {
        if (depth[j] != npos) ++rep.levels[depth[j]];
    }
    for (std::uint64_t d = 0; d < height; ++d) {
        if (rep.levels[d] != (std::uint64_t{1} << d)) {
            rep.upper_levels_full = false;
            break;
        }
    }
    return rep;
}

level_profile level_profile_of(const tree_arrays& tree) {
    std::vector<std::uint64_t> depth;
    if (!compute_depths(tree, depth)) {
        throw std::runtime_error("level_profile_of: corrupt structure");
    }
    std::uint64_t height = 0;
    for (std::uint64_t j = 0; j < tree.n; ++j) {
        if (depth[j] == npos) throw std::runtime_error("level_profile_of: orphan node");
        height = std::max(height, depth[j]);
    }
    level_profile levels(tree.n == 0 ? 0 : height + 1, 0);
    for (std::uint64_t j = 0; j < tree.n; ++j) ++levels[depth[j]];
    return levels;
}

unsigned height_of(const tree_arrays& tree) {
    assert(tree.n >= 1);
    const level_profile levels = level_profile_of(tree);  // throws when corrupt
    return static_cast<unsigned>(levels.size()) - 1u;
}

dangling_edge_report dangling_edges(std::uint64_t n) {
    if (n == 0 || n > max_node_count) {
        throw std::invalid_argument("dangling_edges: n out of range");
    }
    const node_index t = root_index(n);
    const node_index last = n - 1;

    // Ascending path from the last node to the root of the perfect tree of
    // the same height; it may pass through missing indices.
    std::vector<node_index> path{last};
    for (node_index a = last; a != t;) {
        a = parent_rule(a);
        path.push_back(a);
    }
    const auto on_path = [&path](node_index j) {
        return std::find(path.begin(), path.end(), j) != path.end();
    };

    dangling_edge_report rep;
    for (std::uint64_t j = 0; j < n; ++j) {
        if (j != t) {
            const node_index q = parent_rule(j);
            if (q > last) {
                rep.edges.push_back({j, q, edge_kind::up, false, on_path(j)});
            }
        }
        const std::uint64_t b = pow2_trailing(j);
        if (b > 1) {
            const node_index c = j + (b >> 1);
            if (c > last) {
                rep.edges.push_back({j, c, edge_kind::down_right, j == last, on_path(j)});
            }
        }
    }
    for (const dangling_edge& e : rep.edges) {
        if (!e.exempt && !e.on_path) rep.localized = false;
    }
    return rep;
}

}  // namespace flatbst
