#include "idealproj/rational.hpp"

#include <cctype>
#include <ostream>

#include "idealproj/errors.hpp"

namespace idealproj {

Rational::Rational(long num, long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) {
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::size_t pos = 0;
    auto read_digits = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits in rational", pos + 1);
        return text.substr(start, pos - start);
    };

    std::string num;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') num += '-';  // mpz_class rejects a leading '+'
        ++pos;
    }
    num += read_digits();
    std::string den = "1";
    std::size_t den_at = 0;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den_at = pos;
        den = read_digits();  // denominator is unsigned by contract
    }
    if (pos != text.size()) throw ParseError("trailing characters in rational", pos + 1);

    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in rational", den_at + 1);
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw ValidationError("division by zero rational");
    return Rational(mpq_class(value_ / o.value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("division by zero rational");
    value_ /= o.value_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), k);
    if (invert) {
        if (num == 0) throw ValidationError("zero raised to a negative power");
        std::swap(num, den);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace idealproj
