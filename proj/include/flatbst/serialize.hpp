// Text renderings of tree_arrays and the inverse JSON parse.
//
// JSON schema: {"n", "root", "parent" (omitted when not stored), "left",
// "right"}, absent links rendered as null, root null for the empty tree.
// Field order is fixed so serialize -> parse -> serialize is byte-identical.
#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "flatbst/tree.hpp"

namespace flatbst {

std::string to_json(const tree_arrays& tree);

// Parses the schema above; throws std::runtime_error on malformed input
// (bad JSON, missing fields, wrong types or lengths, out-of-range values).
// Parsed trees carry provenance::foreign.
tree_arrays from_json(const std::string& text);

// Graphviz digraph: one label line per node, one edge per present link,
// written parent -> child, left edge before right. Node labels show the
// index, plus the node's key when `keys` is non-empty.
std::string to_dot(const tree_arrays& tree,
                   std::span<const std::int64_t> keys = {});

// Plain text dump: one line each for n, root, parent (when stored), left,
// right, with '-' for absent links.
std::string to_arrays_text(const tree_arrays& tree);

}  // namespace flatbst
