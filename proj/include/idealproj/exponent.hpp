#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace idealproj {

// Multi-index in N_0^d: exponent of a monomial or the order of a partial
// derivative.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t dimension) : e_(dimension, 0) {}
    ExponentVector(std::initializer_list<int> entries);
    explicit ExponentVector(std::vector<int> entries);

    std::size_t dimension() const { return e_.size(); }
    int operator[](std::size_t k) const { return e_[k]; }
    int& operator[](std::size_t k) { return e_[k]; }

    // |alpha|_1
    long degree() const;
    bool is_zero() const;

    ExponentVector operator+(const ExponentVector& o) const;
    // Componentwise difference; throws if any entry would go negative.
    ExponentVector operator-(const ExponentVector& o) const;

    bool operator==(const ExponentVector& o) const { return e_ == o.e_; }
    bool operator!=(const ExponentVector& o) const { return e_ != o.e_; }

    const std::vector<int>& entries() const { return e_; }

    // "(1,0,2)", used in diagnostics.
    std::string str() const;

private:
    std::vector<int> e_;

    void check_nonnegative() const;
};

// Product (componentwise) order on N_0^d.
bool product_leq(const ExponentVector& a, const ExponentVector& b);
bool product_lt(const ExponentVector& a, const ExponentVector& b);

// Lexicographic order with x1 > x2 > ... > xd: a precedes b iff at the first
// differing coordinate a has the smaller entry.
bool lex_less(const ExponentVector& a, const ExponentVector& b);

enum class MonomialOrder { lex };

inline bool monomial_less(const ExponentVector& a, const ExponentVector& b,
                          MonomialOrder order = MonomialOrder::lex) {
    (void)order;
    return lex_less(a, b);
}

// Strict-weak-order functor for ordered containers keyed by exponents.
struct LexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return lex_less(a, b);
    }
};

}  // namespace idealproj
