#include "idealproj/polynomial.hpp"

#include "idealproj/errors.hpp"

namespace idealproj {

Polynomial::Polynomial(std::size_t dimension) : dimension_(dimension) {
    if (dimension == 0) throw ValidationError("polynomial dimension must be positive");
}

Polynomial Polynomial::constant(std::size_t dimension, const Rational& c) {
    Polynomial p(dimension);
    p.add_term(ExponentVector(dimension), c);
    return p;
}

Polynomial Polynomial::monomial(const ExponentVector& alpha, const Rational& c) {
    Polynomial p(alpha.dimension());
    p.add_term(alpha, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t index) {
    if (index >= dimension) {
        throw DimensionMismatchError("variable index " + std::to_string(index + 1) +
                                     " exceeds dimension " + std::to_string(dimension));
    }
    ExponentVector alpha(dimension);
    alpha[index] = 1;
    return monomial(alpha);
}

void Polynomial::check_dimension(std::size_t other, const char* what) const {
    if (dimension_ != other) {
        throw DimensionMismatchError(std::string(what) + ": dimension " +
                                     std::to_string(dimension_) + " vs " +
                                     std::to_string(other));
    }
}

void Polynomial::add_term(const ExponentVector& alpha, const Rational& c) {
    check_dimension(alpha.dimension(), "polynomial term");
    if (c.is_zero()) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational Polynomial::coefficient(const ExponentVector& alpha) const {
    check_dimension(alpha.dimension(), "coefficient lookup");
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_dimension(o.dimension_, "polynomial sum");
    Polynomial result = *this;
    for (const auto& [alpha, c] : o.terms_) result.add_term(alpha, c);
    return result;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_dimension(o.dimension_, "polynomial difference");
    Polynomial result = *this;
    for (const auto& [alpha, c] : o.terms_) result.add_term(alpha, -c);
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_dimension(o.dimension_, "polynomial sum");
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_dimension(o.dimension_, "polynomial difference");
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial result(dimension_);
    for (const auto& [alpha, c] : terms_) result.terms_.emplace(alpha, -c);
    return result;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_dimension(o.dimension_, "polynomial product");
    Polynomial result(dimension_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            result.add_term(a + b, ca * cb);
        }
    }
    return result;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    Polynomial result(dimension_);
    if (s.is_zero()) return result;
    for (const auto& [alpha, c] : terms_) result.terms_.emplace(alpha, c * s);
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return dimension_ == o.dimension_ && terms_ == o.terms_;
}

Rational Polynomial::evaluate(const Point& xi) const {
    check_dimension(xi.dimension(), "evaluation point");
    Rational total(0);
    for (const auto& [alpha, c] : terms_) {
        Rational term = c;
        for (std::size_t k = 0; k < dimension_; ++k) {
            if (alpha[k] != 0) term *= xi[k].pow(alpha[k]);
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::differentiate(const ExponentVector& alpha) const {
    check_dimension(alpha.dimension(), "derivative order");
    Polynomial result(dimension_);
    for (const auto& [beta, c] : terms_) {
        Rational factor = c;
        std::vector<int> rest(dimension_);
        bool vanishes = false;
        for (std::size_t k = 0; k < dimension_; ++k) {
            if (beta[k] < alpha[k]) {
                vanishes = true;
                break;
            }
            // beta_k * (beta_k - 1) * ... * (beta_k - alpha_k + 1)
            for (int j = 0; j < alpha[k]; ++j) factor *= Rational(beta[k] - j);
            rest[k] = beta[k] - alpha[k];
        }
        if (vanishes) continue;
        result.add_term(ExponentVector(std::move(rest)), factor);
    }
    return result;
}

ExponentVector Polynomial::leading_monomial(MonomialOrder) const {
    if (terms_.empty()) throw ValidationError("leading monomial of the zero polynomial");
    return terms_.rbegin()->first;
}

long Polynomial::total_degree() const {
    long best = -1;
    for (const auto& [alpha, c] : terms_) {
        (void)c;
        if (alpha.degree() > best) best = alpha.degree();
    }
    return best;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const ExponentVector& alpha = it->first;
        const Rational& coef = it->second;
        Rational mag = coef.abs();
        if (out.empty()) {
            if (coef.sign() < 0) out += "-";
        } else {
            out += coef.sign() < 0 ? " - " : " + ";
        }
        if (alpha.is_zero()) {
            out += mag.str();
            continue;
        }
        bool need_star = false;
        if (mag != Rational(1)) {
            out += mag.str();
            need_star = true;
        }
        for (std::size_t k = 0; k < dimension_; ++k) {
            if (alpha[k] == 0) continue;
            if (need_star) out += "*";
            out += "x" + std::to_string(k + 1);
            if (alpha[k] > 1) out += "^" + std::to_string(alpha[k]);
            need_star = true;
        }
    }
    return out;
}

bool less_m(const Polynomial& p, const ExponentVector& i) {
    if (p.is_zero()) throw ValidationError("less_m of the zero polynomial");
    if (p.dimension() != i.dimension()) {
        throw DimensionMismatchError("less_m: polynomial dimension " +
                                     std::to_string(p.dimension()) + " vs order dimension " +
                                     std::to_string(i.dimension()));
    }
    for (const auto& [alpha, c] : p.terms()) {
        (void)c;
        if (product_lt(i, alpha)) return true;
    }
    return false;
}

UniPoly substitute_line(const Polynomial& p, const Point& xi, const ExponentVector& c) {
    if (p.dimension() != xi.dimension() || p.dimension() != c.dimension()) {
        throw DimensionMismatchError("substitute_line: mismatched dimensions");
    }
    // Per-variable powers of (xi_k + h*c_k) are shared across terms.
    std::vector<std::vector<UniPoly>> powers(p.dimension());
    for (std::size_t k = 0; k < p.dimension(); ++k) {
        powers[k].push_back(UniPoly::constant(Rational(1)));
    }
    UniPoly total;
    for (const auto& [alpha, coef] : p.terms()) {
        UniPoly term = UniPoly::constant(coef);
        for (std::size_t k = 0; k < p.dimension(); ++k) {
            if (alpha[k] == 0) continue;
            auto& cache = powers[k];
            while (cache.size() <= static_cast<std::size_t>(alpha[k])) {
                UniPoly line(std::vector<Rational>{xi[k], Rational(c[k])});
                cache.push_back(cache.back() * line);
            }
            term = term * cache[alpha[k]];
        }
        total = total + term;
    }
    return total;
}

}  // namespace idealproj
