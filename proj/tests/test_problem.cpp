#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "idealproj/errors.hpp"
#include "idealproj/problem.hpp"
#include "test_util.hpp"

using namespace idealproj;
using testutil::throws_containing;

namespace {

// Two sites on the diagonal, gradient conditions at each: the running
// two-dimensional configuration used across the suite.
Problem diagonal_pair_2d() {
    LowerSet delta({ExponentVector{0, 0}, ExponentVector{0, 1}, ExponentVector{1, 0}});
    std::vector<Site> sites;
    sites.push_back(Site{Point{Rational(0), Rational(0)}, delta});
    sites.push_back(Site{Point{Rational(1), Rational(1)}, delta});
    return validate_problem(2, std::move(sites));
}

Problem diagonal_pair_3d() {
    LowerSet delta({ExponentVector{0, 0, 0}, ExponentVector{0, 0, 1},
                    ExponentVector{0, 1, 0}, ExponentVector{1, 0, 0}});
    std::vector<Site> sites;
    sites.push_back(Site{Point{Rational(0), Rational(0), Rational(0)}, delta});
    sites.push_back(Site{Point{Rational(1), Rational(1), Rational(1)}, delta});
    return validate_problem(3, std::move(sites));
}

}  // namespace

TEST_CASE("lower sets: ordering, membership, closure check") {
    LowerSet delta({ExponentVector{1, 0}, ExponentVector{0, 0}, ExponentVector{0, 1}});
    // stored in increasing lex order regardless of input order
    CHECK(delta.exponents()[0] == ExponentVector{0, 0});
    CHECK(delta.exponents()[1] == ExponentVector{0, 1});
    CHECK(delta.exponents()[2] == ExponentVector{1, 0});
    CHECK(delta.contains(ExponentVector{0, 1}));
    CHECK(!delta.contains(ExponentVector{1, 1}));
    CHECK(delta.is_lower());
    CHECK(delta.dimension() == 2);

    CHECK_THROWS_AS(LowerSet({ExponentVector{0, 0}, ExponentVector{0, 0}}),
                    ValidationError);

    LowerSet gap({ExponentVector{0, 0}, ExponentVector{2, 0}});
    ExponentVector missing, member;
    CHECK(!gap.is_lower(&missing, &member));
    CHECK(missing == ExponentVector{1, 0});
    CHECK(member == ExponentVector{2, 0});
}

TEST_CASE("random lower sets from the test generator really are lower") {
    testutil::Rng rng(301);
    for (int trial = 0; trial < 50; ++trial) {
        const auto d = static_cast<std::size_t>(rng.pick(1, 3));
        const auto size = static_cast<std::size_t>(rng.pick(1, 6));
        CHECK(testutil::random_lower_set(rng, d, size).is_lower());
    }
}

TEST_CASE("problem validation reports the offending site") {
    LowerSet good({ExponentVector{0, 0}});
    LowerSet bad({ExponentVector{0, 0}, ExponentVector{2, 0}});

    CHECK(throws_containing<ValidationError>(
        [] { validate_problem(2, {}); }, "no sites"));
    CHECK(throws_containing<ValidationError>(
        [&] {
            validate_problem(2, {Site{Point{Rational(0)}, good}});
        },
        "sites[0]"));
    CHECK(throws_containing<ValidationError>(
        [&] {
            validate_problem(2, {Site{Point{Rational(0), Rational(0)}, LowerSet()}});
        },
        "sites[0]"));
    CHECK(throws_containing<ValidationError>(
        [&] {
            validate_problem(2, {Site{Point{Rational(0), Rational(0)}, bad}});
        },
        "not a lower set"));
    CHECK(throws_containing<ValidationError>(
        [&] {
            validate_problem(
                2, {Site{Point{Rational(1), Rational(2)}, good},
                    Site{Point{Rational(1), Rational(2)}, good}});
        },
        "coincide"));

    const Problem p = diagonal_pair_2d();
    CHECK(p.functional_count() == 6);
    CHECK(&validate_problem(p) == &p);  // by-reference overload passes through
}

TEST_CASE("squared perturbation bound: pinned values") {
    CHECK(eta0_squared(diagonal_pair_2d()) == EtaBound::finite(Rational(1)));
    CHECK(eta0_squared(diagonal_pair_3d()) == EtaBound::finite(Rational(3, 2)));

    // separated sites with skew order sets: distance^2 25, closest order pair
    // (1,0) vs (0,1) at distance^2 2
    LowerSet first({ExponentVector{0, 0}, ExponentVector{1, 0}});
    LowerSet second({ExponentVector{0, 0}, ExponentVector{0, 1}});
    Problem skew = validate_problem(
        2, {Site{Point{Rational(0), Rational(0)}, first},
            Site{Point{Rational(3), Rational(4)}, second}});
    CHECK(eta0_squared(skew) == EtaBound::finite(Rational(25, 2)));

    // single site: no site pairs, so no constraint
    Problem lone = validate_problem(
        2, {Site{Point{Rational(0), Rational(0)},
                 LowerSet({ExponentVector{0, 0}, ExponentVector{0, 1}})}});
    CHECK(!eta0_squared(lone).is_finite());

    // two sites with only the evaluation order: alpha == alpha' always
    LowerSet origin_only({ExponentVector{0, 0}});
    Problem lagrange_only = validate_problem(
        2, {Site{Point{Rational(0), Rational(0)}, origin_only},
            Site{Point{Rational(5), Rational(0)}, origin_only}});
    CHECK(!eta0_squared(lagrange_only).is_finite());
}

TEST_CASE("admissibility is the strict squared comparison") {
    const Problem p = diagonal_pair_2d();  // eta0^2 = 1
    CHECK(is_admissible(p, Rational(1, 2)));
    CHECK(is_admissible(p, Rational(-1, 2)));
    CHECK(is_admissible(p, Rational(99, 100)));
    CHECK(!is_admissible(p, Rational(1)));   // equality is excluded
    CHECK(!is_admissible(p, Rational(-1)));
    CHECK(!is_admissible(p, Rational(2)));
    CHECK(!is_admissible(p, Rational(0)));   // zero step never admissible

    Problem lone = validate_problem(
        1, {Site{Point{Rational(0)}, LowerSet({ExponentVector{0}, ExponentVector{1}})}});
    CHECK(is_admissible(lone, Rational(1000000)));
    CHECK(!is_admissible(lone, Rational(0)));
}

TEST_CASE("perturbed sites: order pinned to site index then lex") {
    const Problem p = diagonal_pair_2d();
    const Rational h(1, 10);
    const std::vector<Point> pts = perturbed_sites(p, h);
    REQUIRE(pts.size() == 6);
    CHECK(pts[0] == Point{Rational(0), Rational(0)});
    CHECK(pts[1] == Point{Rational(0), Rational(1, 10)});
    CHECK(pts[2] == Point{Rational(1, 10), Rational(0)});
    CHECK(pts[3] == Point{Rational(1), Rational(1)});
    CHECK(pts[4] == Point{Rational(1), Rational(11, 10)});
    CHECK(pts[5] == Point{Rational(11, 10), Rational(1)});

    CHECK_THROWS_AS(perturbed_sites(p, Rational(0)), ValidationError);

    // negative steps move the other way
    const std::vector<Point> neg = perturbed_sites(p, Rational(-1, 10));
    CHECK(neg[1] == Point{Rational(0), Rational(-1, 10)});
}

TEST_CASE("distinct perturbed sites: collision diagnostics") {
    const Problem p = diagonal_pair_2d();
    CHECK(distinct_perturbed_sites(p, Rational(1, 10)).size() == 6);

    // h = 1 collides (0,0)+1*(1,0) with (1,1)+1*(0,-0)... use a crafted pair:
    LowerSet with_x({ExponentVector{0, 0}, ExponentVector{1, 0}});
    LowerSet origin_only({ExponentVector{0, 0}});
    Problem crafted = validate_problem(
        2, {Site{Point{Rational(0), Rational(0)}, with_x},
            Site{Point{Rational(1), Rational(0)}, origin_only}});
    // conditions: 0:(site 0, (0,0)) -> (0,0); 1:(site 0, (1,0)) -> (h,0);
    //             2:(site 1, (0,0)) -> (1,0). At h = 1 conditions 1 and 2 meet.
    CHECK(throws_containing<ValidationError>(
        [&] { distinct_perturbed_sites(crafted, Rational(1)); }, "collide"));
    CHECK(throws_containing<ValidationError>(
        [&] { distinct_perturbed_sites(crafted, Rational(1)); }, "condition 1"));
    CHECK(throws_containing<ValidationError>(
        [&] { distinct_perturbed_sites(crafted, Rational(1)); }, "condition 2"));
    CHECK(distinct_perturbed_sites(crafted, Rational(1, 2)).size() == 3);
}

TEST_CASE("admissible steps always separate the perturbed sites") {
    testutil::Rng rng(302);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Problem p = testutil::random_problem(rng);
        Rational h = rng.nonzero_rational(2, 5);
        while (!is_admissible(p, h)) h /= Rational(2);
        const std::vector<Point> pts = distinct_perturbed_sites(p, h);
        CHECK(pts.size() == p.functional_count());
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("condition bases: hermite orders and perturbed evaluations align") {
    const Problem p = diagonal_pair_2d();
    const std::vector<Functional> herm = hermite_basis(p);
    REQUIRE(herm.size() == 6);
    CHECK(herm[0].kind() == Functional::Kind::lagrange_evaluation);
    CHECK(herm[1].kind() == Functional::Kind::hermite_condition);
    CHECK(herm[1].point() == Point{Rational(0), Rational(0)});
    CHECK(herm[1].derivative() == ExponentVector{0, 1});
    CHECK(herm[5].point() == Point{Rational(1), Rational(1)});
    CHECK(herm[5].derivative() == ExponentVector{1, 0});

    const Rational h(1, 10);
    const std::vector<Functional> lag = lagrange_basis(p, h);
    const std::vector<Point> pts = perturbed_sites(p, h);
    REQUIRE(lag.size() == pts.size());
    for (std::size_t i = 0; i < lag.size(); ++i) {
        CHECK(lag[i].kind() == Functional::Kind::lagrange_evaluation);
        CHECK(lag[i].point() == pts[i]);
        CHECK(lag[i].derivative().is_zero());
    }
}

TEST_CASE("interleaved multiset elements are pairwise distinct") {
    const Problem p = diagonal_pair_2d();
    const std::vector<MultisetElement> elems = algebraic_multiset(p);
    REQUIRE(elems.size() == 6);
    CHECK(elems[0].pair(0) == std::pair<Rational, int>{Rational(0), 0});
    CHECK(elems[1].pair(1) == std::pair<Rational, int>{Rational(0), 1});
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            CHECK(!(elems[i] == elems[j]));
        }
    }

    testutil::Rng rng(303);
    for (int trial = 0; trial < 25; ++trial) {
        const Problem q = testutil::random_problem(rng);
        const std::vector<MultisetElement> e = algebraic_multiset(q);
        CHECK(e.size() == q.functional_count());
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                CHECK(!(e[i] == e[j]));
            }
        }
    }
}

TEST_CASE("perturbation bounds order with infinity on top") {
    const EtaBound half = EtaBound::finite(Rational(1, 2));
    const EtaBound one = EtaBound::finite(Rational(1));
    const EtaBound inf = EtaBound::infinity();
    CHECK(half < one);
    CHECK(one < inf);
    CHECK(half < inf);
    CHECK(!(inf < inf));
    CHECK(!(inf < half));
    CHECK(inf == EtaBound::infinity());
    CHECK(half == EtaBound::finite(Rational(2, 4)));
    CHECK(!(half == one));
    CHECK(half.value() == Rational(1, 2));
    CHECK_THROWS_AS(inf.value(), ValidationError);
    CHECK_THROWS_AS(EtaBound::finite(Rational(0)), ValidationError);
    CHECK_THROWS_AS(EtaBound::finite(Rational(-1)), ValidationError);
    CHECK(inf.str() == "inf");
    CHECK(half.str() == "1/2");
}
