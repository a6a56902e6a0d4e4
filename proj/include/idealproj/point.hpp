#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "idealproj/exponent.hpp"
#include "idealproj/rational.hpp"

namespace idealproj {

// Point in Q^d.
class Point {
public:
    Point() = default;
    explicit Point(std::size_t dimension) : c_(dimension, Rational(0)) {}
    Point(std::initializer_list<Rational> coords) : c_(coords) {}
    explicit Point(std::vector<Rational> coords) : c_(std::move(coords)) {}

    std::size_t dimension() const { return c_.size(); }
    const Rational& operator[](std::size_t k) const { return c_[k]; }
    Rational& operator[](std::size_t k) { return c_[k]; }

    bool operator==(const Point& o) const { return c_ == o.c_; }
    bool operator!=(const Point& o) const { return c_ != o.c_; }

    Point operator-(const Point& o) const;

    // Sum of squared coordinates, ||.||_2^2.
    Rational norm_squared() const;

    const std::vector<Rational>& coords() const { return c_; }

    // "(0, 1/10)", used in diagnostics.
    std::string str() const;

private:
    std::vector<Rational> c_;
};

// base + h*alpha, the perturbation of a site along a derivative order.
Point translate(const Point& base, const Rational& h, const ExponentVector& alpha);

Rational distance_squared(const Point& a, const Point& b);

}  // namespace idealproj
