#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace idealproj {

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator. Thin wrapper over GMP's mpq_class so the rest of
// the library speaks one fixed scalar type.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}              // NOLINT(runtime/explicit)
    Rational(int n) : value_(n) {}               // NOLINT(runtime/explicit)
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z) : value_(z) {}

    // Accepts "n" or "n/d" with optional leading '-'. Throws ParseError on
    // malformed text or a zero denominator.
    static Rational parse(const std::string& text);

    // Canonical text form: "n" when the denominator is 1, else "n/d".
    std::string str() const;

    Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    bool operator==(const Rational& o) const { return value_ == o.value_; }
    bool operator!=(const Rational& o) const { return value_ != o.value_; }
    bool operator<(const Rational& o) const { return value_ < o.value_; }
    bool operator<=(const Rational& o) const { return value_ <= o.value_; }
    bool operator>(const Rational& o) const { return value_ > o.value_; }
    bool operator>=(const Rational& o) const { return value_ >= o.value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    // Integer power; negative exponents invert (throws on 0^-k).
    Rational pow(long e) const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }

    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace idealproj
