#include "idealproj/functional.hpp"

#include "idealproj/errors.hpp"

namespace idealproj {

Functional::Functional(Point point, ExponentVector derivative)
    : point_(std::move(point)),
      derivative_(std::move(derivative)),
      kind_(derivative_.is_zero() ? Kind::lagrange_evaluation : Kind::hermite_condition) {
    if (point_.dimension() != derivative_.dimension()) {
        throw DimensionMismatchError("functional point dimension " +
                                     std::to_string(point_.dimension()) +
                                     " vs derivative dimension " +
                                     std::to_string(derivative_.dimension()));
    }
}

Functional::Functional(Point point)
    : point_(std::move(point)),
      derivative_(point_.dimension()),
      kind_(Kind::lagrange_evaluation) {}

std::string Functional::str() const {
    if (derivative_.is_zero()) return "delta_" + point_.str();
    return "delta_" + point_.str() + " o D^" + derivative_.str();
}

Rational apply_functional(const Functional& lambda, const Polynomial& p) {
    if (p.dimension() != lambda.dimension()) {
        throw DimensionMismatchError("functional dimension " +
                                     std::to_string(lambda.dimension()) +
                                     " vs polynomial dimension " +
                                     std::to_string(p.dimension()));
    }
    if (lambda.derivative().is_zero()) return p.evaluate(lambda.point());
    return p.differentiate(lambda.derivative()).evaluate(lambda.point());
}

}  // namespace idealproj
