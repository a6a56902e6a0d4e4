#include "idealproj/projector.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "idealproj/errors.hpp"

namespace idealproj {

CollocationMatrix collocation_matrix(const std::vector<Functional>& functionals,
                                     const std::vector<ExponentVector>& monomials,
                                     Exec exec) {
    if (functionals.empty()) throw ValidationError("no functionals given");
    if (functionals.size() != monomials.size()) {
        throw ValidationError("collocation needs equally many functionals and monomials, got " +
                              std::to_string(functionals.size()) + " and " +
                              std::to_string(monomials.size()));
    }
    const std::size_t dim = functionals.front().dimension();
    for (const ExponentVector& beta : monomials) {
        if (beta.dimension() != dim) {
            throw DimensionMismatchError("monomial " + beta.str() + " has dimension " +
                                         std::to_string(beta.dimension()) + ", expected " +
                                         std::to_string(dim));
        }
    }

    const std::size_t n = functionals.size();
    std::vector<Polynomial> column_monomials;
    column_monomials.reserve(n);
    for (const ExponentVector& beta : monomials) {
        column_monomials.push_back(Polynomial::monomial(beta));
    }

    CollocationMatrix system;
    system.functionals = functionals;
    system.monomials = monomials;
    system.entries = Matrix(n, n);
    if (exec == Exec::parallel) {
        const long long rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < rows; ++i) {
            const auto r = static_cast<std::size_t>(i);
            for (std::size_t j = 0; j < n; ++j) {
                system.entries.at(r, j) = apply_functional(functionals[r], column_monomials[j]);
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                system.entries.at(i, j) = apply_functional(functionals[i], column_monomials[j]);
            }
        }
    }
    return system;
}

std::vector<Rational> solve_exact(const CollocationMatrix& system,
                                  const std::vector<Rational>& rhs, Exec exec) {
    return solve(system.entries, rhs, exec);
}

bool is_unisolvent(const std::vector<Functional>& functionals,
                   const std::vector<ExponentVector>& monomials, Exec exec) {
    if (functionals.size() != monomials.size()) return false;
    CollocationMatrix system = collocation_matrix(functionals, monomials, exec);
    return !determinant(system.entries, exec).is_zero();
}

Interpolant interpolant_for(const std::vector<Functional>& functionals,
                            const Escalier& basis, const Polynomial& f, Exec exec) {
    if (f.dimension() != basis.dimension) {
        throw DimensionMismatchError("target has dimension " + std::to_string(f.dimension()) +
                                     ", basis has dimension " +
                                     std::to_string(basis.dimension));
    }
    CollocationMatrix system = collocation_matrix(functionals, basis.monomials, exec);
    std::vector<Rational> rhs = functional_values(functionals, f, exec);
    std::vector<Rational> coefficients = solve_exact(system, rhs, exec);

    Polynomial p(basis.dimension);
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (coefficients[j].is_zero()) continue;
        p += Polynomial::monomial(basis.monomials[j], coefficients[j]);
    }
    return Interpolant{std::move(p), basis, std::move(coefficients), std::nullopt};
}

Interpolant hermite_interpolant(const Problem& problem, const Polynomial& f, Exec exec) {
    return interpolant_for(hermite_basis(problem), range_lex(problem, exec), f, exec);
}

Interpolant lagrange_interpolant(const Problem& problem, const Rational& h,
                                 const Polynomial& f, Exec exec) {
    std::vector<Point> points = distinct_perturbed_sites(problem, h);
    std::vector<Functional> evaluations;
    evaluations.reserve(points.size());
    for (Point& p : points) evaluations.emplace_back(std::move(p));
    Interpolant result = interpolant_for(evaluations, range_lex(problem, exec), f, exec);
    result.h = h;
    return result;
}

std::vector<ExponentVector> border_set(const Escalier& basis) {
    std::set<ExponentVector, LexLess> border;
    for (const ExponentVector& beta : basis.monomials) {
        for (std::size_t k = 0; k < basis.dimension; ++k) {
            ExponentVector up = beta;
            up[k] += 1;
            border.insert(std::move(up));
        }
    }
    std::vector<ExponentVector> out;
    for (const ExponentVector& beta : border) {
        if (!std::binary_search(basis.monomials.begin(), basis.monomials.end(), beta,
                                LexLess{})) {
            out.push_back(beta);
        }
    }
    return out;
}

namespace {

BorderBasis border_basis_for(const std::vector<Functional>& functionals, Escalier basis,
                             std::optional<Rational> h, Exec exec) {
    std::vector<ExponentVector> border = border_set(basis);
    CollocationMatrix system = collocation_matrix(functionals, basis.monomials, exec);

    // One elimination for all border monomials: rhs column j holds the
    // functional values of x^{b_j}.
    const std::size_t n = functionals.size();
    Matrix rhs(n, border.size());
    for (std::size_t j = 0; j < border.size(); ++j) {
        std::vector<Rational> column =
            functional_values(functionals, Polynomial::monomial(border[j]), exec);
        for (std::size_t i = 0; i < n; ++i) rhs.at(i, j) = column[i];
    }
    Matrix coefficients = solve_many(system.entries, rhs, exec);

    BorderBasis result;
    result.basis = std::move(basis);
    result.border = std::move(border);
    result.h = std::move(h);
    result.elements.reserve(result.border.size());
    for (std::size_t j = 0; j < result.border.size(); ++j) {
        Polynomial g = Polynomial::monomial(result.border[j]);
        for (std::size_t i = 0; i < n; ++i) {
            if (coefficients.at(i, j).is_zero()) continue;
            g += Polynomial::monomial(result.basis.monomials[i], -coefficients.at(i, j));
        }
        result.elements.push_back(std::move(g));
    }
    return result;
}

}  // namespace

BorderBasis border_basis(const Problem& problem, Exec exec) {
    return border_basis_for(hermite_basis(problem), range_lex(problem, exec), std::nullopt,
                            exec);
}

BorderBasis border_basis(const Problem& problem, const Rational& h, Exec exec) {
    std::vector<Point> points = distinct_perturbed_sites(problem, h);
    std::vector<Functional> evaluations;
    evaluations.reserve(points.size());
    for (Point& p : points) evaluations.emplace_back(std::move(p));
    return border_basis_for(evaluations, range_lex(problem, exec), h, exec);
}

Rational sup_coefficient_distance(const Polynomial& a, const Polynomial& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatchError("polynomials have dimensions " +
                                     std::to_string(a.dimension()) + " and " +
                                     std::to_string(b.dimension()));
    }
    Rational best(0);
    for (const auto& [alpha, coeff] : a.terms()) {
        Rational gap = (coeff - b.coefficient(alpha)).abs();
        if (best < gap) best = gap;
    }
    for (const auto& [alpha, coeff] : b.terms()) {
        if (!a.coefficient(alpha).is_zero()) continue;  // already visited
        Rational gap = coeff.abs();
        if (best < gap) best = gap;
    }
    return best;
}

namespace {

ConvergenceRow convergence_row(const Problem& problem, const Polynomial& f,
                               const Rational& h, const Escalier& basis,
                               const Polynomial& limit) {
    ConvergenceRow row;
    row.h = h;
    try {
        std::vector<Point> points = distinct_perturbed_sites(problem, h);
        std::vector<Functional> evaluations;
        evaluations.reserve(points.size());
        for (Point& p : points) evaluations.emplace_back(std::move(p));
        Interpolant interp = interpolant_for(evaluations, basis, f, Exec::serial);
        interp.h = h;
        row.distance = sup_coefficient_distance(interp.polynomial, limit);
        row.interpolant = std::move(interp);
    } catch (const Error& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

ConvergenceTable convergence_table(const Problem& problem, const Polynomial& f,
                                   const std::vector<Rational>& steps, Exec exec) {
    Escalier basis = range_lex(problem, exec);
    ConvergenceTable table{basis, interpolant_for(hermite_basis(problem), basis, f, exec), {}};

    table.rows.resize(steps.size());
    if (exec == Exec::parallel) {
        // Rows run concurrently, each with serial inner solves; every row
        // traps its own failures, so nothing escapes the loop.
        const long long count = static_cast<long long>(steps.size());
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < count; ++i) {
            const auto k = static_cast<std::size_t>(i);
            table.rows[k] = convergence_row(problem, f, steps[k], table.basis,
                                            table.limit.polynomial);
        }
    } else {
        for (std::size_t k = 0; k < steps.size(); ++k) {
            table.rows[k] = convergence_row(problem, f, steps[k], table.basis,
                                            table.limit.polynomial);
        }
    }
    return table;
}

}  // namespace idealproj
