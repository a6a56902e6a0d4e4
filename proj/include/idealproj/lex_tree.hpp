#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "idealproj/problem.hpp"

namespace idealproj {

// Canonical form of a rooted unordered tree: children shapes sorted and
// concatenated, so equal strings are exactly the label-blind isomorphic
// trees.
struct TreeShape {
    std::string canonical;

    bool operator==(const TreeShape& o) const { return canonical == o.canonical; }
    bool operator!=(const TreeShape& o) const { return canonical != o.canonical; }
};

// Rooted d-level tree grouping d-tuples by shared coordinate suffixes: the
// children of the root carry the d-th coordinate of each tuple, their
// children the (d-1)-th, and so on, merging equal labels. Tuples are either
// plain points (labels are Rationals) or point/order interleavings (labels
// are (Rational, order) pairs); plain points are stored with order 0.
class LexTree {
public:
    struct Node {
        Rational value;
        int order = 0;
        std::vector<Node> children;
    };

    // Throws on an empty list, ragged dimensions, or duplicate tuples.
    static LexTree build_tree(const std::vector<MultisetElement>& tuples);
    static LexTree build_tree(const std::vector<Point>& points);

    std::size_t dimension() const { return dimension_; }
    bool labels_carry_orders() const { return with_orders_; }
    const Node& root() const { return root_; }

    std::size_t leaf_count() const;
    std::size_t node_count() const;  // including the root

    TreeShape shape() const;

    // format is "ascii" or "dot"; anything else (including "") is an error.
    std::string dump_tree(const std::string& format) const;

private:
    LexTree() = default;
    static LexTree build(const std::vector<MultisetElement>& tuples, bool with_orders);

    std::size_t dimension_ = 0;
    bool with_orders_ = false;
    Node root_;
};

// Label-blind unordered isomorphism; throws on depth mismatch.
bool same_structure(const LexTree& a, const LexTree& b);

// Smallest ratio |value difference| / |order difference| over label pairs
// within one sibling group, minimized over every sibling group of the
// interleaved-multiset tree at every level; pairs where either component
// coincides are skipped, and an empty candidate set yields infinity.
EtaBound algorithm1_eta(const Problem& problem);

}  // namespace idealproj
