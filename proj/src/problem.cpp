#include "idealproj/problem.hpp"

#include <algorithm>

#include "idealproj/errors.hpp"

namespace idealproj {

LowerSet::LowerSet(std::vector<ExponentVector> exponents) : exponents_(std::move(exponents)) {
    std::sort(exponents_.begin(), exponents_.end(), LexLess{});
    for (std::size_t k = 1; k < exponents_.size(); ++k) {
        if (exponents_[k] == exponents_[k - 1]) {
            throw ValidationError("duplicate exponent " + exponents_[k].str() +
                                  " in lower set");
        }
    }
}

std::size_t LowerSet::dimension() const {
    return exponents_.empty() ? 0 : exponents_.front().dimension();
}

bool LowerSet::contains(const ExponentVector& alpha) const {
    return std::binary_search(exponents_.begin(), exponents_.end(), alpha, LexLess{});
}

bool LowerSet::is_lower(ExponentVector* missing, ExponentVector* member) const {
    if (exponents_.empty()) return false;
    // Closure under decrementing one coordinate implies closure under the
    // full product order.
    for (const ExponentVector& alpha : exponents_) {
        for (std::size_t k = 0; k < alpha.dimension(); ++k) {
            if (alpha[k] == 0) continue;
            ExponentVector below = alpha;
            below[k] -= 1;
            if (!contains(below)) {
                if (missing) *missing = below;
                if (member) *member = alpha;
                return false;
            }
        }
    }
    return true;
}

std::size_t Problem::functional_count() const {
    std::size_t n = 0;
    for (const Site& site : sites) n += site.delta.size();
    return n;
}

std::string MultisetElement::str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < dimension(); ++k) {
        if (k > 0) out += ", ";
        out += "(" + point[k].str() + ", " + std::to_string(order[k]) + ")";
    }
    out += ")";
    return out;
}

EtaBound EtaBound::finite(Rational value) {
    if (value.sign() <= 0) {
        throw ValidationError("finite eta bound must be positive, got " + value.str());
    }
    EtaBound b;
    b.finite_ = true;
    b.value_ = std::move(value);
    return b;
}

const Rational& EtaBound::value() const {
    if (!finite_) throw ValidationError("eta bound is infinite");
    return value_;
}

bool EtaBound::operator<(const EtaBound& o) const {
    if (!finite_) return false;
    if (!o.finite_) return true;
    return value_ < o.value_;
}

bool EtaBound::operator==(const EtaBound& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || value_ == o.value_;
}

std::string EtaBound::str() const {
    return finite_ ? value_.str() : "inf";
}

Problem validate_problem(std::size_t dimension, std::vector<Site> sites) {
    if (dimension == 0) throw ValidationError("problem dimension must be positive");
    if (sites.empty()) throw ValidationError("problem has no sites");
    for (std::size_t k = 0; k < sites.size(); ++k) {
        const std::string where = "sites[" + std::to_string(k) + "]";
        if (sites[k].point.dimension() != dimension) {
            throw ValidationError(where + ".point: dimension " +
                                  std::to_string(sites[k].point.dimension()) +
                                  ", expected " + std::to_string(dimension));
        }
        const LowerSet& delta = sites[k].delta;
        if (delta.empty()) throw ValidationError(where + ".delta: empty");
        for (const ExponentVector& alpha : delta.exponents()) {
            if (alpha.dimension() != dimension) {
                throw ValidationError(where + ".delta: exponent " + alpha.str() +
                                      " has dimension " + std::to_string(alpha.dimension()) +
                                      ", expected " + std::to_string(dimension));
            }
        }
        ExponentVector missing, member;
        if (!delta.is_lower(&missing, &member)) {
            throw ValidationError(where + ".delta: not a lower set, missing " +
                                  missing.str() + " <= " + member.str());
        }
    }
    for (std::size_t k = 0; k < sites.size(); ++k) {
        for (std::size_t l = k + 1; l < sites.size(); ++l) {
            if (sites[k].point == sites[l].point) {
                throw ValidationError("sites[" + std::to_string(k) + "] and sites[" +
                                      std::to_string(l) + "] coincide at " +
                                      sites[k].point.str());
            }
        }
    }
    Problem problem;
    problem.dimension = dimension;
    problem.sites = std::move(sites);
    return problem;
}

const Problem& validate_problem(const Problem& problem) {
    validate_problem(problem.dimension, problem.sites);
    return problem;
}

EtaBound eta0_squared(const Problem& problem) {
    bool have = false;
    Rational best(0);
    for (std::size_t k = 0; k < problem.sites.size(); ++k) {
        for (std::size_t l = k + 1; l < problem.sites.size(); ++l) {
            Rational site_gap =
                distance_squared(problem.sites[k].point, problem.sites[l].point);
            for (const ExponentVector& a : problem.sites[k].delta.exponents()) {
                for (const ExponentVector& b : problem.sites[l].delta.exponents()) {
                    if (a == b) continue;
                    Rational order_gap(0);
                    for (std::size_t j = 0; j < problem.dimension; ++j) {
                        Rational diff(a[j] - b[j]);
                        order_gap += diff * diff;
                    }
                    Rational ratio = site_gap / order_gap;
                    if (!have || ratio < best) {
                        best = ratio;
                        have = true;
                    }
                }
            }
        }
    }
    return have ? EtaBound::finite(best) : EtaBound::infinity();
}

bool is_admissible(const Problem& problem, const Rational& h) {
    if (h.is_zero()) return false;
    EtaBound bound = eta0_squared(problem);
    return !bound.is_finite() || h * h < bound.value();
}

std::vector<Point> perturbed_sites(const Problem& problem, const Rational& h) {
    if (h.is_zero()) throw ValidationError("perturbation step h must be nonzero");
    std::vector<Point> points;
    points.reserve(problem.functional_count());
    for (const Site& site : problem.sites) {
        for (const ExponentVector& alpha : site.delta.exponents()) {
            points.push_back(translate(site.point, h, alpha));
        }
    }
    return points;
}

namespace {

// Flat condition index -> "sites[k], order (alpha)" for diagnostics.
std::string condition_label(const Problem& problem, std::size_t flat) {
    std::size_t k = 0;
    for (const Site& site : problem.sites) {
        if (flat < site.delta.size()) {
            return "sites[" + std::to_string(k) + "], order " +
                   site.delta.exponents()[flat].str();
        }
        flat -= site.delta.size();
        ++k;
    }
    return "condition " + std::to_string(flat);
}

}  // namespace

std::vector<Point> distinct_perturbed_sites(const Problem& problem, const Rational& h) {
    std::vector<Point> points = perturbed_sites(problem, h);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                throw ValidationError(
                    "perturbed points collide for h = " + h.str() + ": condition " +
                    std::to_string(i) + " (" + condition_label(problem, i) +
                    ") and condition " + std::to_string(j) + " (" +
                    condition_label(problem, j) + ") both map to " + points[i].str());
            }
        }
    }
    return points;
}

std::vector<Functional> hermite_basis(const Problem& problem) {
    std::vector<Functional> basis;
    basis.reserve(problem.functional_count());
    for (const Site& site : problem.sites) {
        for (const ExponentVector& alpha : site.delta.exponents()) {
            basis.emplace_back(site.point, alpha);
        }
    }
    return basis;
}

std::vector<Functional> lagrange_basis(const Problem& problem, const Rational& h) {
    std::vector<Functional> basis;
    basis.reserve(problem.functional_count());
    for (Point& p : perturbed_sites(problem, h)) basis.emplace_back(std::move(p));
    return basis;
}

std::vector<MultisetElement> algebraic_multiset(const Problem& problem) {
    std::vector<MultisetElement> omega;
    omega.reserve(problem.functional_count());
    for (const Site& site : problem.sites) {
        for (const ExponentVector& alpha : site.delta.exponents()) {
            omega.push_back(MultisetElement{site.point, alpha});
        }
    }
    return omega;
}

}  // namespace idealproj
