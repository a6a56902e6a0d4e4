#include "idealproj/unipoly.hpp"

#include <algorithm>

namespace idealproj {

UniPoly::UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(std::size_t power, const Rational& c) {
    std::vector<Rational> coeffs(power + 1, Rational(0));
    coeffs[power] = c;
    return UniPoly(std::move(coeffs));
}

Rational UniPoly::coefficient(std::size_t power) const {
    if (power >= c_.size()) return Rational(0);
    return c_[power];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> sum(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) sum[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) sum[k] += o.c_[k];
    return UniPoly(std::move(sum));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    return *this + (-o);
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> neg(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) neg[k] = -c_[k];
    return UniPoly(std::move(neg));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return UniPoly(std::move(prod));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> scaled(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) scaled[k] = c_[k] * s;
    return UniPoly(std::move(scaled));
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly result = constant(Rational(1));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        base = base * base;
        e >>= 1UL;
    }
    return result;
}

Rational UniPoly::evaluate(const Rational& t) const {
    Rational value(0);
    for (std::size_t k = c_.size(); k > 0; --k) {
        value = value * t + c_[k - 1];
    }
    return value;
}

long UniPoly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (!c_[k].is_zero()) return static_cast<long>(k);
    }
    return -1;
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k > 0; --k) {
        const Rational& coef = c_[k - 1];
        if (coef.is_zero()) continue;
        Rational mag = coef.abs();
        if (out.empty()) {
            if (coef.sign() < 0) out += "-";
        } else {
            out += coef.sign() < 0 ? " - " : " + ";
        }
        std::size_t power = k - 1;
        if (power == 0) {
            out += mag.str();
        } else {
            if (mag != Rational(1)) out += mag.str() + "*";
            out += var;
            if (power > 1) out += "^" + std::to_string(power);
        }
    }
    return out;
}

}  // namespace idealproj
