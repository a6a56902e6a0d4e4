#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "idealproj/exponent.hpp"
#include "idealproj/point.hpp"
#include "idealproj/polynomial.hpp"
#include "idealproj/rational.hpp"
#include "idealproj/unipoly.hpp"

namespace idealproj {

// Alternating weighted power sum
//   sum_{j=0}^{i-1} (-1)^j C(i,j) (i-j)^m,
// which collapses to i! when m = i and to 0 when m < i. Requires i >= m > 0,
// throws ValidationError otherwise.
Rational binomial_sum(long i, long m);

enum class DifferenceRoute {
    // Alternating sum over the whole shift box:
    //   sum_{0 <= j <= i} (-1)^{|j|} prod_k C(i_k, j_k) * p(xi + h*(i - j)).
    direct,
    // Product of per-variable univariate expansions, one factor per
    // coordinate of each term of p.
    factored,
};

// Forward-difference quotient numerator of p at xi with order vector i,
// expanded as an exact polynomial in the step h. Both routes return the same
// polynomial; the pair exists so they can check each other.
UniPoly forward_difference_poly(const Polynomial& p, const Point& xi,
                                const ExponentVector& i,
                                DifferenceRoute route = DifferenceRoute::direct);

// Structure of the expansion of one difference at one point:
//  (a) every coefficient below h^{|i|} vanishes,
//  (b) the h^{|i|} coefficient is exactly (D^i p)(xi),
//  (c) coefficients above h^{|i|} can only appear when some monomial of p
//      strictly dominates i in the product order (support_exceeds_order).
// The converse of (c) can fail: a dominating monomial may still produce a
// remainder that cancels to zero, so ok demands only the stated direction.
struct DifferenceReport {
    ExponentVector order;             // i
    long order_degree = 0;            // |i|
    UniPoly expansion;
    Rational derivative_value;        // (D^i p)(xi)
    bool low_orders_vanish = false;   // (a)
    bool matched_derivative = false;  // (b)
    bool exact_no_remainder = false;  // nothing above h^{|i|}
    bool support_exceeds_order = false;
    bool routes_match = false;        // direct and factored agree
    bool ok = false;
};

DifferenceReport verify_difference_lemmas(const Polynomial& p, const Point& xi,
                                          const ExponentVector& i);

struct DifferenceCase {
    Polynomial p;
    Point xi;
    ExponentVector order;
};

// Deterministic stream of verification inputs: dimension up to 3, order
// entries up to 3, total degree of p up to 6, all coordinates exact
// rationals. Identical across platforms for a fixed seed.
std::vector<DifferenceCase> sample_difference_cases(std::uint64_t seed, std::size_t count);

}  // namespace idealproj
