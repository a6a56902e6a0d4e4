#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idealproj/escalier.hpp"
#include "idealproj/functional.hpp"
#include "idealproj/linalg.hpp"
#include "idealproj/polynomial.hpp"
#include "idealproj/problem.hpp"

namespace idealproj {

// Square system entries[i][j] = lambda_i(x^beta_j) tying a functional list to
// a monomial basis.
struct CollocationMatrix {
    std::vector<Functional> functionals;
    std::vector<ExponentVector> monomials;
    Matrix entries;
};

// Requires equally many functionals and monomials. Assembly of the entries is
// the parallel kernel; values are identical to the serial reference.
CollocationMatrix collocation_matrix(const std::vector<Functional>& functionals,
                                     const std::vector<ExponentVector>& monomials,
                                     Exec exec = Exec::serial);

// Coefficients c with entries * c = rhs, exact. Throws SingularMatrixError
// when the system is degenerate.
std::vector<Rational> solve_exact(const CollocationMatrix& system,
                                  const std::vector<Rational>& rhs,
                                  Exec exec = Exec::serial);

// True iff the collocation matrix of the pair is nonsingular.
bool is_unisolvent(const std::vector<Functional>& functionals,
                   const std::vector<ExponentVector>& monomials,
                   Exec exec = Exec::serial);

// Projection of a target polynomial onto an escalier basis: the unique
// element of the span matching the target under every functional.
struct Interpolant {
    Polynomial polynomial;
    Escalier basis;
    std::vector<Rational> coefficients;  // aligned with basis.monomials
    // Perturbation step when the interpolant came from point evaluations at
    // moved sites; absent for the derivative-condition projector.
    std::optional<Rational> h;
};

Interpolant interpolant_for(const std::vector<Functional>& functionals,
                            const Escalier& basis, const Polynomial& f,
                            Exec exec = Exec::serial);

// Projector attached to the problem's derivative conditions, in its own
// escalier basis.
Interpolant hermite_interpolant(const Problem& problem, const Polynomial& f,
                                Exec exec = Exec::serial);

// Interpolant through the h-perturbed sites, expressed in the same escalier
// basis as the derivative-condition projector so coefficients are directly
// comparable. Requires the perturbed points to be distinct and unisolvent
// for that basis.
Interpolant lagrange_interpolant(const Problem& problem, const Rational& h,
                                 const Polynomial& f, Exec exec = Exec::serial);

// Monomials just outside the escalier: beta + e_k for accepted beta, minus
// the escalier itself, in increasing lex order.
std::vector<ExponentVector> border_set(const Escalier& basis);

// For each border monomial b the element b - P b, which generates the kernel
// ideal together with the rest of the border.
struct BorderBasis {
    Escalier basis;
    std::vector<ExponentVector> border;  // increasing lex
    std::vector<Polynomial> elements;    // aligned with border; monic in b
    std::optional<Rational> h;
};

BorderBasis border_basis(const Problem& problem, Exec exec = Exec::serial);
BorderBasis border_basis(const Problem& problem, const Rational& h,
                         Exec exec = Exec::serial);

// Largest absolute difference between coefficients, over the union of the
// supports.
Rational sup_coefficient_distance(const Polynomial& a, const Polynomial& b);

struct ConvergenceRow {
    Rational h;
    std::optional<Interpolant> interpolant;  // present iff the row succeeded
    Rational distance;                       // sup distance to the limit
    std::string error;                       // nonempty iff the row failed
};

// Perturbed interpolants of f for each step h, all in the shared escalier
// basis, with their exact sup distances to the derivative-condition
// interpolant. A failing row (colliding points, singular system) is recorded
// in place without aborting the others. Rows are computed concurrently under
// the parallel kernel.
struct ConvergenceTable {
    Escalier basis;
    Interpolant limit;
    std::vector<ConvergenceRow> rows;
};

ConvergenceTable convergence_table(const Problem& problem, const Polynomial& f,
                                   const std::vector<Rational>& steps,
                                   Exec exec = Exec::serial);

}  // namespace idealproj
