#include "idealproj/exponent.hpp"

#include "idealproj/errors.hpp"

namespace idealproj {

namespace {

void check_same_dimension(const ExponentVector& a, const ExponentVector& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatchError("exponent vectors of dimension " +
                                     std::to_string(a.dimension()) + " and " +
                                     std::to_string(b.dimension()));
    }
}

}  // namespace

ExponentVector::ExponentVector(std::initializer_list<int> entries) : e_(entries) {
    check_nonnegative();
}

ExponentVector::ExponentVector(std::vector<int> entries) : e_(std::move(entries)) {
    check_nonnegative();
}

void ExponentVector::check_nonnegative() const {
    for (int v : e_) {
        if (v < 0) throw ValidationError("negative entry in exponent vector");
    }
}

long ExponentVector::degree() const {
    long total = 0;
    for (int v : e_) total += v;
    return total;
}

bool ExponentVector::is_zero() const {
    for (int v : e_) {
        if (v != 0) return false;
    }
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    check_same_dimension(*this, o);
    std::vector<int> sum(e_.size());
    for (std::size_t k = 0; k < e_.size(); ++k) sum[k] = e_[k] + o.e_[k];
    return ExponentVector(std::move(sum));
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    check_same_dimension(*this, o);
    std::vector<int> diff(e_.size());
    for (std::size_t k = 0; k < e_.size(); ++k) {
        diff[k] = e_[k] - o.e_[k];
        if (diff[k] < 0) {
            throw ValidationError("exponent difference " + str() + " - " + o.str() +
                                  " is negative at coordinate " + std::to_string(k));
        }
    }
    return ExponentVector(std::move(diff));
}

std::string ExponentVector::str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (k > 0) out += ",";
        out += std::to_string(e_[k]);
    }
    out += ")";
    return out;
}

bool product_leq(const ExponentVector& a, const ExponentVector& b) {
    check_same_dimension(a, b);
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        if (a[k] > b[k]) return false;
    }
    return true;
}

bool product_lt(const ExponentVector& a, const ExponentVector& b) {
    return product_leq(a, b) && a != b;
}

bool lex_less(const ExponentVector& a, const ExponentVector& b) {
    check_same_dimension(a, b);
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
}

}  // namespace idealproj
