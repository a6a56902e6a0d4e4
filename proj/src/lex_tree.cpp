#include "idealproj/lex_tree.hpp"

#include <algorithm>
#include <functional>

#include "idealproj/errors.hpp"

namespace idealproj {

namespace {

// Insert one tuple, walking coordinates from the last down to the first and
// reusing children with matching labels.
void insert_tuple(LexTree::Node& root, const MultisetElement& element) {
    LexTree::Node* node = &root;
    for (std::size_t level = element.dimension(); level > 0; --level) {
        auto [value, order] = element.pair(level - 1);
        auto it = std::find_if(node->children.begin(), node->children.end(),
                               [&](const LexTree::Node& child) {
                                   return child.value == value && child.order == order;
                               });
        if (it == node->children.end()) {
            node->children.push_back(LexTree::Node{value, order, {}});
            it = std::prev(node->children.end());
        }
        node = &*it;
    }
}

void sort_children(LexTree::Node& node) {
    std::sort(node.children.begin(), node.children.end(),
              [](const LexTree::Node& a, const LexTree::Node& b) {
                  if (a.value != b.value) return a.value < b.value;
                  return a.order < b.order;
              });
    for (LexTree::Node& child : node.children) sort_children(child);
}

std::string shape_of(const LexTree::Node& node) {
    std::vector<std::string> parts;
    parts.reserve(node.children.size());
    for (const LexTree::Node& child : node.children) parts.push_back(shape_of(child));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const std::string& part : parts) out += part;
    out += ")";
    return out;
}

std::string node_label(const LexTree::Node& node, bool with_orders) {
    if (!with_orders) return node.value.str();
    return node.value.str() + ";" + std::to_string(node.order);
}

}  // namespace

LexTree LexTree::build(const std::vector<MultisetElement>& tuples, bool with_orders) {
    if (tuples.empty()) throw ValidationError("cannot build a tree from no tuples");
    const std::size_t d = tuples.front().dimension();
    if (d == 0) throw ValidationError("tree tuples must have positive dimension");
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (tuples[i].dimension() != d) {
            throw DimensionMismatchError("tuple " + std::to_string(i) + " has dimension " +
                                         std::to_string(tuples[i].dimension()) +
                                         ", expected " + std::to_string(d));
        }
        for (std::size_t j = i + 1; j < tuples.size(); ++j) {
            if (tuples[i] == tuples[j]) {
                throw ValidationError("duplicate tuple " + tuples[i].str());
            }
        }
    }
    LexTree tree;
    tree.dimension_ = d;
    tree.with_orders_ = with_orders;
    for (const MultisetElement& element : tuples) insert_tuple(tree.root_, element);
    sort_children(tree.root_);
    return tree;
}

LexTree LexTree::build_tree(const std::vector<MultisetElement>& tuples) {
    return build(tuples, true);
}

LexTree LexTree::build_tree(const std::vector<Point>& points) {
    std::vector<MultisetElement> tuples;
    tuples.reserve(points.size());
    for (const Point& p : points) {
        tuples.push_back(MultisetElement{p, ExponentVector(p.dimension())});
    }
    return build(tuples, false);
}

std::size_t LexTree::leaf_count() const {
    std::function<std::size_t(const Node&)> count = [&](const Node& node) -> std::size_t {
        if (node.children.empty()) return 1;
        std::size_t total = 0;
        for (const Node& child : node.children) total += count(child);
        return total;
    };
    return count(root_);
}

std::size_t LexTree::node_count() const {
    std::function<std::size_t(const Node&)> count = [&](const Node& node) -> std::size_t {
        std::size_t total = 1;
        for (const Node& child : node.children) total += count(child);
        return total;
    };
    return count(root_);
}

TreeShape LexTree::shape() const {
    return TreeShape{shape_of(root_)};
}

std::string LexTree::dump_tree(const std::string& format) const {
    if (format == "ascii") {
        std::string out = "root\n";
        std::function<void(const Node&, std::size_t)> walk = [&](const Node& node,
                                                                 std::size_t depth) {
            out.append(2 * depth, ' ');
            out += node_label(node, with_orders_);
            out += "\n";
            for (const Node& child : node.children) walk(child, depth + 1);
        };
        for (const Node& child : root_.children) walk(child, 1);
        return out;
    }
    if (format == "dot") {
        // Nodes are named by level and position within that level, in
        // depth-first order.
        std::string out = "digraph lextree {\n";
        out += "  n0_0 [label=\"root\"];\n";
        std::vector<std::size_t> next_at_level(dimension_ + 1, 0);
        std::function<void(const Node&, std::size_t, const std::string&)> walk =
            [&](const Node& node, std::size_t level, const std::string& parent) {
                std::string name =
                    "n" + std::to_string(level) + "_" + std::to_string(next_at_level[level]++);
                out += "  " + name + " [label=\"" + node_label(node, with_orders_) + "\"];\n";
                out += "  " + parent + " -> " + name + ";\n";
                for (const Node& child : node.children) walk(child, level + 1, name);
            };
        for (const Node& child : root_.children) walk(child, 1, "n0_0");
        out += "}\n";
        return out;
    }
    throw ValidationError("unknown tree format \"" + format + "\" (expected ascii or dot)");
}

bool same_structure(const LexTree& a, const LexTree& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatchError("trees of depth " + std::to_string(a.dimension()) +
                                     " and " + std::to_string(b.dimension()));
    }
    return a.shape() == b.shape();
}

EtaBound algorithm1_eta(const Problem& problem) {
    LexTree tree = LexTree::build_tree(algebraic_multiset(problem));
    bool have = false;
    Rational best(0);
    std::function<void(const LexTree::Node&)> visit = [&](const LexTree::Node& node) {
        const auto& group = node.children;
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                if (group[i].value == group[j].value) continue;
                if (group[i].order == group[j].order) continue;
                Rational ratio = (group[i].value - group[j].value).abs() /
                                 Rational(group[i].order - group[j].order).abs();
                if (!have || ratio < best) {
                    best = ratio;
                    have = true;
                }
            }
        }
        for (const LexTree::Node& child : group) visit(child);
    };
    visit(tree.root());
    return have ? EtaBound::finite(best) : EtaBound::infinity();
}

}  // namespace idealproj
