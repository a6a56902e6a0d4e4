#pragma once

#include <cstddef>
#include <string>

#include "idealproj/polynomial.hpp"

namespace idealproj {

// A polynomial expression together with its expanded normal form.
//
// Grammar (whitespace separates tokens, juxtaposition is not multiplication):
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := ['-'] base ['^' digits]
//   base     := rational | variable | '(' expr ')'
//   rational := digits ['/' digits]
//   variable := 'x' digits        index between 1 and the dimension
//
// Parse failures throw ParseError with a 1-based character position.
class PolynomialExpression {
public:
    static PolynomialExpression parse(const std::string& text, std::size_t dimension);

    const std::string& source() const { return source_; }
    const Polynomial& value() const { return value_; }

private:
    PolynomialExpression(std::string source, Polynomial value)
        : source_(std::move(source)), value_(std::move(value)) {}

    std::string source_;
    Polynomial value_;
};

// Shorthand for PolynomialExpression::parse(text, dimension).value().
Polynomial parse_polynomial(const std::string& text, std::size_t dimension);

}  // namespace idealproj
