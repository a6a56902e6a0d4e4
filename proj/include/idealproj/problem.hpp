#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "idealproj/exponent.hpp"
#include "idealproj/functional.hpp"
#include "idealproj/point.hpp"
#include "idealproj/rational.hpp"

namespace idealproj {

// Finite set of derivative orders, stored in increasing lex order. Whether it
// is actually downward closed is checked by is_lower / validate_problem, not
// by the constructor, so that validation can report precise diagnostics.
class LowerSet {
public:
    LowerSet() = default;
    explicit LowerSet(std::vector<ExponentVector> exponents);

    std::size_t size() const { return exponents_.size(); }
    bool empty() const { return exponents_.empty(); }
    std::size_t dimension() const;
    const std::vector<ExponentVector>& exponents() const { return exponents_; }
    bool contains(const ExponentVector& alpha) const;

    // Downward closure under the product order. On failure reports one
    // missing element and the member that requires it.
    bool is_lower(ExponentVector* missing = nullptr, ExponentVector* member = nullptr) const;

private:
    std::vector<ExponentVector> exponents_;
};

struct Site {
    Point point;
    LowerSet delta;
};

// Interpolation scheme: distinct sites, each with its set of derivative
// orders. The associated conditions are delta_{xi} o D^alpha.
struct Problem {
    std::size_t dimension = 0;
    std::vector<Site> sites;

    // Total condition count n.
    std::size_t functional_count() const;
};

// One element u(xi, alpha) = ((xi_1,alpha_1),...,(xi_d,alpha_d)) of the
// interleaved multiset built from a problem's conditions.
struct MultisetElement {
    Point point;
    ExponentVector order;

    std::size_t dimension() const { return point.dimension(); }
    std::pair<Rational, int> pair(std::size_t k) const { return {point[k], order[k]}; }

    bool operator==(const MultisetElement& o) const {
        return point == o.point && order == o.order;
    }

    std::string str() const;
};

// A positive perturbation bound: either an exact rational or infinity.
class EtaBound {
public:
    static EtaBound infinity() { return EtaBound(); }
    static EtaBound finite(Rational value);

    bool is_finite() const { return finite_; }
    const Rational& value() const;  // throws when infinite

    // Orders infinity above every finite value.
    bool operator<(const EtaBound& o) const;
    bool operator==(const EtaBound& o) const;

    std::string str() const;  // "1/2" or "inf"

private:
    EtaBound() : finite_(false), value_(0) {}
    bool finite_;
    Rational value_;
};

// Checks dimensions, nonemptiness, lower-set closure, and site distinctness.
// Throws ValidationError naming the offending site index. Returns the
// validated problem.
Problem validate_problem(std::size_t dimension, std::vector<Site> sites);
const Problem& validate_problem(const Problem& problem);

// Squared form of the smallest site-distance/order-distance ratio:
// min over site pairs k<l and alpha in Delta_k, alpha' in Delta_l with
// alpha != alpha' of |xi_k - xi_l|^2 / |alpha - alpha'|^2. Infinity when the
// candidate set is empty. The square keeps the bound rational; admissibility
// of a step h is the strict test h^2 < eta0_squared.
EtaBound eta0_squared(const Problem& problem);

bool is_admissible(const Problem& problem, const Rational& h);

// Points xi_k + h*alpha, ordered by site index then increasing lex on alpha.
// Distinctness is the caller's concern (see is_admissible).
std::vector<Point> perturbed_sites(const Problem& problem, const Rational& h);

// perturbed_sites plus a pairwise distinctness check. Throws ValidationError
// naming both colliding conditions (flat index, site index, derivative order)
// when two perturbed points coincide.
std::vector<Point> distinct_perturbed_sites(const Problem& problem, const Rational& h);

// Conditions delta_{xi_k} o D^alpha in the same order as perturbed_sites.
std::vector<Functional> hermite_basis(const Problem& problem);

// Evaluations at perturbed_sites(problem, h), same order.
std::vector<Functional> lagrange_basis(const Problem& problem, const Rational& h);

// u-images of the conditions, same order; pairwise distinct for any valid
// problem.
std::vector<MultisetElement> algebraic_multiset(const Problem& problem);

}  // namespace idealproj
