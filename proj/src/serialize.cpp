#include "flatbst/serialize.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace flatbst {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json links_to_json(const std::vector<node_index>& links) {
    ordered_json arr = ordered_json::array();
    for (const node_index v : links) {
        if (v == npos) {
            arr.push_back(nullptr);
        } else {
            arr.push_back(v);
        }
    }
    return arr;
}

std::vector<node_index> links_from_json(const ordered_json& arr,
                                        std::uint64_t n, const char* name) {
    if (!arr.is_array() || arr.size() != n) {
        throw std::runtime_error(std::string("tree json: bad array ") + name);
    }
    std::vector<node_index> links;
    links.reserve(n);
    for (const auto& v : arr) {
        if (v.is_null()) {
            links.push_back(npos);
        } else if (v.is_number_unsigned() && v.get<std::uint64_t>() <= max_node_count) {
            links.push_back(v.get<std::uint64_t>());
        } else {
            throw std::runtime_error(std::string("tree json: bad value in ") + name);
        }
    }
    return links;
}

}  // namespace

std::string to_json(const tree_arrays& tree) {
    ordered_json j;
    j["n"] = tree.n;
    if (tree.root == npos) {
        j["root"] = nullptr;
    } else {
        j["root"] = tree.root;
    }
    if (tree.parent) j["parent"] = links_to_json(*tree.parent);
    j["left"] = links_to_json(tree.left);
    j["right"] = links_to_json(tree.right);
    return j.dump();
}

tree_arrays from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::runtime_error(std::string("tree json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("root") ||
        !j.contains("left") || !j.contains("right")) {
        throw std::runtime_error("tree json: missing required fields");
    }
    if (!j["n"].is_number_unsigned()) {
        throw std::runtime_error("tree json: n must be a non-negative integer");
    }

    tree_arrays tree;
    tree.n = j["n"].get<std::uint64_t>();
    if (tree.n > max_node_count) throw std::runtime_error("tree json: n above 2^63");
    tree.source = provenance::foreign;
    if (j["root"].is_null()) {
        tree.root = npos;
    } else if (j["root"].is_number_unsigned() &&
               j["root"].get<std::uint64_t>() <= max_node_count) {
        tree.root = j["root"].get<std::uint64_t>();
    } else {
        throw std::runtime_error("tree json: bad root");
    }
    tree.left = links_from_json(j["left"], tree.n, "left");
    tree.right = links_from_json(j["right"], tree.n, "right");
    if (j.contains("parent")) {
        tree.parent = links_from_json(j["parent"], tree.n, "parent");
    }
    return tree;
}

std::string to_dot(const tree_arrays& tree, std::span<const std::int64_t> keys) {
    std::string out = "digraph bst {\n";
    for (std::uint64_t j = 0; j < tree.n; ++j) {
        out += "  " + std::to_string(j) + " [label=\"" + std::to_string(j);
        if (!keys.empty()) out += ": " + std::to_string(keys[j]);
        out += "\"];\n";
    }
    for (std::uint64_t j = 0; j < tree.n; ++j) {
        for (const node_index c : {tree.left[j], tree.right[j]}) {
            if (c != npos) {
                out += "  " + std::to_string(j) + " -> " + std::to_string(c) + ";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

std::string to_arrays_text(const tree_arrays& tree) {
    const auto link = [](node_index v) {
        return v == npos ? std::string("-") : std::to_string(v);
    };
    const auto row = [&link](const char* name, const std::vector<node_index>& v) {
        std::string line = name;
        for (const node_index x : v) {
            line += ' ';
            line += link(x);
        }
        line += '\n';
        return line;
    };
    std::string out = "n " + std::to_string(tree.n) + "\n";
    out += "root " + link(tree.root) + "\n";
    if (tree.parent) out += row("parent", *tree.parent);
    out += row("left", tree.left);
    out += row("right", tree.right);
    return out;
}

}  // namespace flatbst
