#include "idealproj/escalier.hpp"

#include <set>
#include <string>
#include <utility>

#include "idealproj/errors.hpp"
#include "idealproj/polynomial.hpp"

namespace idealproj {

std::vector<Rational> functional_values(const std::vector<Functional>& lambdas,
                                        const Polynomial& p, Exec exec) {
    std::vector<Rational> values(lambdas.size());
    if (exec == Exec::parallel) {
        const long long n = static_cast<long long>(lambdas.size());
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            values[k] = apply_functional(lambdas[k], p);
        }
    } else {
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            values[i] = apply_functional(lambdas[i], p);
        }
    }
    return values;
}

namespace {

bool corner_divides(const std::vector<ExponentVector>& corners,
                    const ExponentVector& beta) {
    for (const ExponentVector& corner : corners) {
        if (product_leq(corner, beta)) return true;
    }
    return false;
}

// After the greedy scan fails to reach n accepted monomials the functionals
// are dependent. Every condition vanishes on the ideal spanned by the
// rejected corners, so restricting the evaluation rows to the accepted
// columns loses nothing: the first row that reduces to zero against its
// predecessors is the first functional in their span.
[[noreturn]] void report_dependent(const std::vector<Functional>& functionals,
                                   const std::vector<ExponentVector>& accepted,
                                   Exec exec) {
    std::vector<Polynomial> basis;
    basis.reserve(accepted.size());
    for (const ExponentVector& beta : accepted) basis.push_back(Polynomial::monomial(beta));

    RowEchelon echelon(accepted.size(), exec);
    for (std::size_t i = 0; i < functionals.size(); ++i) {
        std::vector<Rational> row(accepted.size());
        for (std::size_t j = 0; j < accepted.size(); ++j) {
            row[j] = apply_functional(functionals[i], basis[j]);
        }
        if (!echelon.absorb(std::move(row))) {
            throw DependentFunctionalsError(
                "functionals are linearly dependent: condition " + std::to_string(i) +
                " (" + functionals[i].str() + ") lies in the span of its predecessors",
                i);
        }
    }
    // Unreachable for a scan that genuinely stalled.
    throw DependentFunctionalsError("functionals are linearly dependent", 0);
}

}  // namespace

Escalier groebner_escalier(const std::vector<Functional>& functionals,
                           std::size_t dimension, Exec exec) {
    if (dimension == 0) throw ValidationError("dimension must be positive");
    if (functionals.empty()) throw ValidationError("no functionals given");
    for (std::size_t i = 0; i < functionals.size(); ++i) {
        if (functionals[i].dimension() != dimension) {
            throw DimensionMismatchError("functional " + std::to_string(i) +
                                         " has dimension " +
                                         std::to_string(functionals[i].dimension()) +
                                         ", expected " + std::to_string(dimension));
        }
    }

    const std::size_t n = functionals.size();
    Escalier result;
    result.dimension = dimension;

    // Candidate pool in increasing lex order. Children of an accepted
    // monomial are lex-larger than it, so candidates are popped in strictly
    // increasing order and both output lists come out sorted.
    std::set<ExponentVector, LexLess> pool;
    pool.insert(ExponentVector(dimension));
    RowEchelon echelon(n, exec);

    while (!pool.empty() && result.monomials.size() < n) {
        ExponentVector beta = *pool.begin();
        pool.erase(pool.begin());
        if (corner_divides(result.corners, beta)) continue;

        Polynomial candidate = Polynomial::monomial(beta);
        if (echelon.absorb(functional_values(functionals, candidate, exec))) {
            for (std::size_t k = 0; k < dimension; ++k) {
                ExponentVector child = beta;
                child[k] += 1;
                pool.insert(std::move(child));
            }
            result.monomials.push_back(std::move(beta));
        } else {
            result.corners.push_back(std::move(beta));
        }
    }

    if (result.monomials.size() < n) {
        report_dependent(functionals, result.monomials, exec);
    }
    return result;
}

Escalier range_lex(const Problem& problem, Exec exec) {
    return groebner_escalier(hermite_basis(problem), problem.dimension, exec);
}

Escalier range_lex_perturbed(const Problem& problem, const Rational& h, Exec exec) {
    std::vector<Point> points = distinct_perturbed_sites(problem, h);
    std::vector<Functional> evaluations;
    evaluations.reserve(points.size());
    for (Point& p : points) evaluations.emplace_back(std::move(p));
    return groebner_escalier(evaluations, problem.dimension, exec);
}

bool ranges_equal(const Problem& problem, const Rational& h, Exec exec) {
    // Both monomial lists are sorted in increasing lex order, so set equality
    // is plain vector equality.
    return range_lex(problem, exec).monomials == range_lex_perturbed(problem, h, exec).monomials;
}

}  // namespace idealproj
