#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "idealproj/rational.hpp"

namespace idealproj {

// Dense univariate polynomial over Q, used for expansions in the step size h.
// Coefficient k belongs to h^k; the highest stored coefficient is nonzero
// (the zero polynomial stores nothing).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);

    static UniPoly constant(const Rational& c);
    // c * h^power
    static UniPoly monomial(std::size_t power, const Rational& c);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    // Zero beyond the stored degree.
    Rational coefficient(std::size_t power) const;
    const std::vector<Rational>& coefficients() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    UniPoly operator-() const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    UniPoly pow(unsigned long e) const;

    Rational evaluate(const Rational& t) const;

    // Smallest power with nonzero coefficient; -1 for the zero polynomial.
    long valuation() const;

    // "h^2 - 3*h + 1/2" style, highest power first.
    std::string str(const std::string& var = "h") const;

private:
    std::vector<Rational> c_;

    void trim();
};

}  // namespace idealproj
