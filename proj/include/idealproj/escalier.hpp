#pragma once

#include <cstddef>
#include <vector>

#include "idealproj/functional.hpp"
#include "idealproj/linalg.hpp"
#include "idealproj/problem.hpp"

namespace idealproj {

// lambda_i(p) for every functional, in order. The parallel kernel fills the
// entries concurrently; values are identical to the serial reference.
std::vector<Rational> functional_values(const std::vector<Functional>& lambdas,
                                        const Polynomial& p, Exec exec = Exec::serial);

// Monomial basis of the quotient by the joint kernel of a functional list,
// w.r.t. lex with x1 > x2 > ... > xd.
struct Escalier {
    std::size_t dimension = 0;
    // Accepted monomials in increasing lex order; a lower set of size n.
    std::vector<ExponentVector> monomials;
    // Rejected candidates (leading monomials of the kernel ideal's minimal
    // generators found by the greedy scan), increasing lex.
    std::vector<ExponentVector> corners;
};

// Greedy scan in increasing lex order: a candidate monomial is accepted iff
// its evaluation vector under the functionals is independent of the vectors
// of the monomials accepted before it; a rejected candidate becomes a corner
// and all its multiples are pruned. Accepted monomials' variable successors
// feed the candidate pool. Throws DependentFunctionalsError (with the first
// offending index) when the functionals are not linearly independent.
//
// Pruning is sound only when the joint kernel of the functionals is an
// ideal, i.e. their span is closed under composition with multiplication by
// each variable. Point evaluations and the derivative conditions of a
// validated problem (lower order sets) satisfy this.
Escalier groebner_escalier(const std::vector<Functional>& functionals,
                           std::size_t dimension, Exec exec = Exec::serial);

// Escalier of the problem's derivative-evaluation conditions.
Escalier range_lex(const Problem& problem, Exec exec = Exec::serial);

// Escalier of the evaluations at the h-perturbed sites. Throws
// ValidationError naming the colliding pair when two perturbed points
// coincide.
Escalier range_lex_perturbed(const Problem& problem, const Rational& h,
                             Exec exec = Exec::serial);

// True iff the two escaliers above coincide as sets.
bool ranges_equal(const Problem& problem, const Rational& h, Exec exec = Exec::serial);

}  // namespace idealproj
