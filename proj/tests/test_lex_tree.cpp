#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "idealproj/errors.hpp"
#include "idealproj/lex_tree.hpp"
#include "idealproj/problem.hpp"
#include "test_util.hpp"

using namespace idealproj;

namespace {

Problem diagonal_pair_2d() {
    LowerSet delta({ExponentVector{0, 0}, ExponentVector{0, 1}, ExponentVector{1, 0}});
    return validate_problem(2, {Site{Point{Rational(0), Rational(0)}, delta},
                                Site{Point{Rational(1), Rational(1)}, delta}});
}

Problem diagonal_pair_3d() {
    LowerSet delta({ExponentVector{0, 0, 0}, ExponentVector{0, 0, 1},
                    ExponentVector{0, 1, 0}, ExponentVector{1, 0, 0}});
    return validate_problem(
        3, {Site{Point{Rational(0), Rational(0), Rational(0)}, delta},
            Site{Point{Rational(1), Rational(1), Rational(1)}, delta}});
}

// Trie oracle: the label path of a tuple is its coordinate/order pairs read
// from the last coordinate to the first. The tree must contain exactly the
// prefixes of these paths, one node per distinct prefix, plus the root.
using Label = std::pair<Rational, int>;
using Path = std::vector<Label>;

Path reversed_path(const MultisetElement& u) {
    Path path;
    for (std::size_t k = u.dimension(); k-- > 0;) path.push_back(u.pair(k));
    return path;
}

bool tree_contains_path(const LexTree::Node& node, const Path& path, std::size_t at) {
    if (at == path.size()) return node.children.empty();
    for (const LexTree::Node& child : node.children) {
        if (child.value == path[at].first && child.order == path[at].second) {
            return tree_contains_path(child, path, at + 1);
        }
    }
    return false;
}

std::size_t distinct_prefix_count(const std::vector<Path>& paths) {
    std::vector<Path> prefixes;
    for (const Path& p : paths) {
        for (std::size_t len = 1; len <= p.size(); ++len) {
            Path prefix(p.begin(), p.begin() + static_cast<long>(len));
            if (std::find(prefixes.begin(), prefixes.end(), prefix) == prefixes.end()) {
                prefixes.push_back(std::move(prefix));
            }
        }
    }
    return prefixes.size();
}

}  // namespace

TEST_CASE("grouping by coordinate suffixes: pinned counts for the 2d pair") {
    const Problem p = diagonal_pair_2d();
    const LexTree tree = LexTree::build_tree(algebraic_multiset(p));
    CHECK(tree.dimension() == 2);
    CHECK(tree.labels_carry_orders());
    CHECK(tree.node_count() == 11);
    CHECK(tree.leaf_count() == 6);
    REQUIRE(tree.root().children.size() == 4);
    // children ordered by (value, order): labels (0,0), (0,1), (1,0), (1,1)
    CHECK(tree.root().children[0].value == Rational(0));
    CHECK(tree.root().children[0].order == 0);
    CHECK(tree.root().children[0].children.size() == 2);
    CHECK(tree.root().children[1].order == 1);
    CHECK(tree.root().children[1].children.size() == 1);
    CHECK(tree.root().children[2].value == Rational(1));
    CHECK(tree.root().children[2].children.size() == 2);
    CHECK(tree.root().children[3].children.size() == 1);
}

TEST_CASE("the tree is exactly the suffix trie of its tuples") {
    testutil::Rng rng(401);
    for (int trial = 0; trial < 30; ++trial) {
        const Problem p = testutil::random_problem(rng);
        const std::vector<MultisetElement> elems = algebraic_multiset(p);
        const LexTree tree = LexTree::build_tree(elems);

        std::vector<Path> paths;
        for (const MultisetElement& u : elems) paths.push_back(reversed_path(u));
        for (const Path& path : paths) {
            CHECK(tree_contains_path(tree.root(), path, 0));
        }
        CHECK(tree.node_count() == distinct_prefix_count(paths) + 1);
        CHECK(tree.leaf_count() == elems.size());
    }
}

TEST_CASE("plain point trees carry order zero everywhere") {
    const std::vector<Point> pts = {Point{Rational(1), Rational(2)},
                                    Point{Rational(1), Rational(3)},
                                    Point{Rational(0), Rational(2)}};
    const LexTree tree = LexTree::build_tree(pts);
    CHECK(!tree.labels_carry_orders());
    CHECK(tree.leaf_count() == 3);
    // level 1 groups by the second coordinate: values 2 and 3
    REQUIRE(tree.root().children.size() == 2);
    CHECK(tree.root().children[0].value == Rational(2));
    CHECK(tree.root().children[0].children.size() == 2);
    CHECK(tree.root().children[1].value == Rational(3));
    for (const LexTree::Node& child : tree.root().children) CHECK(child.order == 0);
}

TEST_CASE("construction rejects degenerate input") {
    CHECK_THROWS_AS(LexTree::build_tree(std::vector<Point>{}), ValidationError);
    CHECK_THROWS_AS(LexTree::build_tree(std::vector<MultisetElement>{}), ValidationError);
    CHECK_THROWS_AS(
        LexTree::build_tree(std::vector<Point>{Point{Rational(1)},
                                               Point{Rational(1), Rational(2)}}),
        DimensionMismatchError);
    CHECK_THROWS_AS(
        LexTree::build_tree(std::vector<Point>{Point{Rational(1)}, Point{Rational(1)}}),
        ValidationError);
    // same point, different orders: distinct tuples, fine
    const std::vector<MultisetElement> mixed = {
        MultisetElement{Point{Rational(1)}, ExponentVector{0}},
        MultisetElement{Point{Rational(1)}, ExponentVector{1}}};
    CHECK(LexTree::build_tree(mixed).leaf_count() == 2);
}

TEST_CASE("shape is input-order independent and label-blind") {
    testutil::Rng rng(402);
    for (int trial = 0; trial < 20; ++trial) {
        const Problem p = testutil::random_problem(rng);
        std::vector<MultisetElement> elems = algebraic_multiset(p);
        const LexTree tree = LexTree::build_tree(elems);

        // deterministic shuffle
        for (std::size_t i = elems.size(); i > 1; --i) {
            std::swap(elems[i - 1],
                      elems[static_cast<std::size_t>(rng.pick(0, static_cast<long>(i) - 1))]);
        }
        const LexTree reordered = LexTree::build_tree(elems);
        CHECK(tree.shape() == reordered.shape());
        CHECK(tree.dump_tree("ascii") == reordered.dump_tree("ascii"));
        CHECK(same_structure(tree, reordered));
    }

    // label-blind: translating every point preserves the structure
    const Problem p = diagonal_pair_2d();
    std::vector<MultisetElement> shifted = algebraic_multiset(p);
    for (MultisetElement& u : shifted) {
        std::vector<Rational> coords;
        for (std::size_t k = 0; k < u.point.dimension(); ++k) {
            coords.push_back(u.point[k] + Rational(7, 3));
        }
        u.point = Point(std::move(coords));
    }
    const LexTree a = LexTree::build_tree(algebraic_multiset(p));
    const LexTree b = LexTree::build_tree(shifted);
    CHECK(same_structure(a, b));
    CHECK(a.shape() == b.shape());
    CHECK(a.dump_tree("ascii") != b.dump_tree("ascii"));  // labels do differ
}

TEST_CASE("structure comparison distinguishes genuinely different trees") {
    const Problem p = diagonal_pair_2d();
    const LexTree omega = LexTree::build_tree(algebraic_multiset(p));

    // admissible step: isomorphic grouping
    const LexTree close = LexTree::build_tree(perturbed_sites(p, Rational(1, 10)));
    CHECK(same_structure(omega, close));
    CHECK(omega.shape() == close.shape());

    // step 1 merges second coordinates 0+1 and 1+0: different grouping
    const LexTree far = LexTree::build_tree(perturbed_sites(p, Rational(1)));
    CHECK(far.root().children.size() == 3);
    CHECK(!same_structure(omega, far));
    CHECK(omega.shape() != far.shape());

    // depth mismatch is an error, not "false"
    const LexTree flat = LexTree::build_tree(std::vector<Point>{Point{Rational(0)}});
    CHECK_THROWS_AS(same_structure(omega, flat), DimensionMismatchError);
}

TEST_CASE("structure comparison is an equivalence on same-depth trees") {
    testutil::Rng rng(403);
    std::vector<LexTree> trees;
    for (int i = 0; i < 6; ++i) {
        Problem p = testutil::random_problem(rng);
        while (p.dimension != 2) p = testutil::random_problem(rng);
        trees.push_back(LexTree::build_tree(algebraic_multiset(p)));
    }
    for (const LexTree& t : trees) CHECK(same_structure(t, t));
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = 0; j < trees.size(); ++j) {
            CHECK(same_structure(trees[i], trees[j]) ==
                  same_structure(trees[j], trees[i]));
            for (std::size_t k = 0; k < trees.size(); ++k) {
                if (same_structure(trees[i], trees[j]) &&
                    same_structure(trees[j], trees[k])) {
                    CHECK(same_structure(trees[i], trees[k]));
                }
            }
        }
    }
}

TEST_CASE("tree dumps") {
    const std::vector<Point> pts = {Point{Rational(0)}, Point{Rational(1, 2)}};
    const LexTree tree = LexTree::build_tree(pts);
    const std::string ascii = tree.dump_tree("ascii");
    CHECK(ascii.find("0") != std::string::npos);
    CHECK(ascii.find("1/2") != std::string::npos);
    CHECK(ascii.back() == '\n');
    const std::string dot = tree.dump_tree("dot");
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.back() == '\n');
    CHECK_THROWS_AS(tree.dump_tree("svg"), ValidationError);
    CHECK_THROWS_AS(tree.dump_tree(""), ValidationError);
}

TEST_CASE("sibling-ratio bound: pinned values") {
    CHECK(algorithm1_eta(diagonal_pair_2d()) == EtaBound::finite(Rational(1)));
    CHECK(algorithm1_eta(diagonal_pair_3d()) == EtaBound::finite(Rational(1)));

    // one dimension: orders 0,1,2 at 0 and order 0 at 1; closest ratio is
    // |0-1| / |2-0| = 1/2
    Problem line = validate_problem(
        1, {Site{Point{Rational(0)},
                 LowerSet({ExponentVector{0}, ExponentVector{1}, ExponentVector{2}})},
            Site{Point{Rational(1)}, LowerSet({ExponentVector{0}})}});
    CHECK(algorithm1_eta(line) == EtaBound::finite(Rational(1, 2)));

    // single site: every sibling pair shares its point coordinate
    Problem lone = validate_problem(
        2, {Site{Point{Rational(0), Rational(0)},
                 LowerSet({ExponentVector{0, 0}, ExponentVector{0, 1}})}});
    CHECK(!algorithm1_eta(lone).is_finite());

    // two plain evaluation sites: every pair shares order 0
    LowerSet origin_only({ExponentVector{0, 0}});
    Problem evals = validate_problem(
        2, {Site{Point{Rational(0), Rational(0)}, origin_only},
            Site{Point{Rational(2), Rational(3)}, origin_only}});
    CHECK(!algorithm1_eta(evals).is_finite());
}

TEST_CASE("sibling-ratio bound is an exhaustive minimum over the trie") {
    // oracle: recompute the bound straight from the trie definition
    testutil::Rng rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        const Problem p = testutil::random_problem(rng);
        const LexTree tree = LexTree::build_tree(algebraic_multiset(p));

        bool have = false;
        Rational best(0);
        auto visit = [&](auto&& self, const LexTree::Node& node) -> void {
            for (std::size_t i = 0; i < node.children.size(); ++i) {
                for (std::size_t j = i + 1; j < node.children.size(); ++j) {
                    const auto& a = node.children[i];
                    const auto& b = node.children[j];
                    if (a.value == b.value || a.order == b.order) continue;
                    const Rational ratio =
                        (a.value - b.value).abs() / Rational(a.order - b.order).abs();
                    if (!have || ratio < best) {
                        best = ratio;
                        have = true;
                    }
                }
            }
            for (const LexTree::Node& child : node.children) self(self, child);
        };
        visit(visit, tree.root());

        const EtaBound expected = have ? EtaBound::finite(best) : EtaBound::infinity();
        CHECK(algorithm1_eta(p) == expected);
    }
}

TEST_CASE("steps below the sibling-ratio bound preserve the grouping") {
    testutil::Rng rng(405);
    int finite_cases = 0;
    for (int trial = 0; trial < 60 && finite_cases < 15; ++trial) {
        const Problem p = testutil::random_problem(rng);
        const EtaBound eta = algorithm1_eta(p);
        if (!eta.is_finite()) continue;
        ++finite_cases;
        const LexTree omega = LexTree::build_tree(algebraic_multiset(p));
        for (const Rational& h : {eta.value() / Rational(2), -(eta.value() / Rational(2)),
                                  eta.value() / Rational(10)}) {
            const LexTree perturbed = LexTree::build_tree(perturbed_sites(p, h));
            CHECK(same_structure(omega, perturbed));
        }
    }
    CHECK(finite_cases == 15);
}
