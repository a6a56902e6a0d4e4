#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "idealproj/exponent.hpp"
#include "idealproj/point.hpp"
#include "idealproj/rational.hpp"
#include "idealproj/unipoly.hpp"

namespace idealproj {

// Sparse multivariate polynomial over Q with a fixed ambient dimension.
// Terms are kept in increasing lex order and never store a zero coefficient.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, LexLess>;

    // The zero polynomial in d variables.
    explicit Polynomial(std::size_t dimension);

    static Polynomial constant(std::size_t dimension, const Rational& c);
    static Polynomial monomial(const ExponentVector& alpha, const Rational& c = Rational(1));
    // x_{index+1} as a polynomial in d variables (0-based index).
    static Polynomial variable(std::size_t dimension, std::size_t index);

    std::size_t dimension() const { return dimension_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Zero if the monomial is absent.
    Rational coefficient(const ExponentVector& alpha) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rational evaluate(const Point& xi) const;

    // D^alpha: plain iterated partial derivative, no factorial normalization.
    Polynomial differentiate(const ExponentVector& alpha) const;

    // Lex-greatest exponent in the support; throws on the zero polynomial.
    ExponentVector leading_monomial(MonomialOrder order = MonomialOrder::lex) const;

    long total_degree() const;  // -1 for the zero polynomial

    // Terms in decreasing lex order, e.g. "4*x1*x2 - 4*x1 + 3". Output is
    // accepted back by the expression parser.
    std::string str() const;

private:
    std::size_t dimension_;
    TermMap terms_;

    void add_term(const ExponentVector& alpha, const Rational& c);
    void check_dimension(std::size_t other, const char* what) const;
};

// True iff some monomial alpha' in Supp(p) satisfies i < alpha' in the strict
// product order. This is the reading consistent with how the remainder cases
// split in the finite-difference expansion; see finite_difference.hpp.
bool less_m(const Polynomial& p, const ExponentVector& i);

// p(xi + h*c) expanded as a univariate polynomial in h.
UniPoly substitute_line(const Polynomial& p, const Point& xi, const ExponentVector& c);

}  // namespace idealproj
