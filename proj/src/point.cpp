#include "idealproj/point.hpp"

#include "idealproj/errors.hpp"

namespace idealproj {

namespace {

void check_same_dimension(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DimensionMismatchError("points of dimension " + std::to_string(a) +
                                     " and " + std::to_string(b));
    }
}

}  // namespace

Point Point::operator-(const Point& o) const {
    check_same_dimension(dimension(), o.dimension());
    std::vector<Rational> diff(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) diff[k] = c_[k] - o.c_[k];
    return Point(std::move(diff));
}

Rational Point::norm_squared() const {
    Rational total(0);
    for (const Rational& v : c_) total += v * v;
    return total;
}

std::string Point::str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k > 0) out += ", ";
        out += c_[k].str();
    }
    out += ")";
    return out;
}

Point translate(const Point& base, const Rational& h, const ExponentVector& alpha) {
    check_same_dimension(base.dimension(), alpha.dimension());
    std::vector<Rational> coords(base.dimension());
    for (std::size_t k = 0; k < base.dimension(); ++k) {
        coords[k] = base[k] + h * Rational(alpha[k]);
    }
    return Point(std::move(coords));
}

Rational distance_squared(const Point& a, const Point& b) {
    return (a - b).norm_squared();
}

}  // namespace idealproj
