#pragma once

#include <string>

#include "idealproj/exponent.hpp"
#include "idealproj/point.hpp"
#include "idealproj/polynomial.hpp"

namespace idealproj {

// Interpolation condition: evaluation of a partial derivative at a point,
// p |-> (D^derivative p)(point).
class Functional {
public:
    enum class Kind { hermite_condition, lagrange_evaluation };

    // Derivative-evaluation condition (Kind::hermite_condition).
    Functional(Point point, ExponentVector derivative);
    // Plain evaluation (Kind::lagrange_evaluation, derivative = 0).
    explicit Functional(Point point);

    const Point& point() const { return point_; }
    const ExponentVector& derivative() const { return derivative_; }
    Kind kind() const { return kind_; }
    std::size_t dimension() const { return point_.dimension(); }

    bool operator==(const Functional& o) const {
        return point_ == o.point_ && derivative_ == o.derivative_;
    }

    // "delta_(0,0) o D^(1,0)" / "delta_(0,1/10)"
    std::string str() const;

private:
    Point point_;
    ExponentVector derivative_;
    Kind kind_;
};

// (D^alpha p)(xi), exactly.
Rational apply_functional(const Functional& lambda, const Polynomial& p);

}  // namespace idealproj
