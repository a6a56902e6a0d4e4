#include "idealproj/parser.hpp"

#include <gmpxx.h>

#include <cctype>
#include <memory>
#include <utility>

#include "idealproj/errors.hpp"

namespace idealproj {

namespace {

struct AstNode;
using AstPtr = std::unique_ptr<AstNode>;

// Explicit parse tree; expansion to a Polynomial is a separate walk so the
// grammar stays readable.
struct AstNode {
    enum class Kind { sum, difference, product, power, negation, literal, variable };

    Kind kind;
    AstPtr lhs;
    AstPtr rhs;
    unsigned long exponent = 0;  // power
    Rational literal_value;      // literal
    std::size_t index = 0;       // variable, 0-based

    explicit AstNode(Kind k) : kind(k), literal_value(0) {}
};

class Parser {
public:
    Parser(const std::string& text, std::size_t dimension)
        : text_(text), dimension_(dimension) {}

    AstPtr run() {
        AstPtr root = parse_expression();
        skip_whitespace();
        if (pos_ < text_.size()) {
            fail(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        }
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message, std::size_t at) const {
        throw ParseError(message, at + 1);
    }

    void skip_whitespace() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_whitespace();
        return pos_ >= text_.size();
    }

    char peek() const { return text_[pos_]; }

    bool consume(char c) {
        skip_whitespace();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string read_digits(const char* what) {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (pos_ >= text_.size()) fail(std::string("expected ") + what, pos_);
            fail(std::string("expected ") + what + ", found '" + text_[pos_] + "'", pos_);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    AstPtr parse_expression() {
        AstPtr node = parse_term();
        while (true) {
            skip_whitespace();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                const char op = text_[pos_++];
                AstPtr parent = std::make_unique<AstNode>(
                    op == '+' ? AstNode::Kind::sum : AstNode::Kind::difference);
                parent->lhs = std::move(node);
                parent->rhs = parse_term();
                node = std::move(parent);
            } else {
                return node;
            }
        }
    }

    AstPtr parse_term() {
        AstPtr node = parse_factor();
        while (consume('*')) {
            AstPtr parent = std::make_unique<AstNode>(AstNode::Kind::product);
            parent->lhs = std::move(node);
            parent->rhs = parse_factor();
            node = std::move(parent);
        }
        return node;
    }

    AstPtr parse_factor() {
        bool negated = consume('-');
        AstPtr node = parse_base();
        skip_whitespace();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_whitespace();
            if (pos_ < text_.size() && text_[pos_] == '-') {
                fail("negative exponent", pos_);
            }
            const std::size_t at = pos_;
            std::string digits = read_digits("exponent");
            if (digits.size() > 7) fail("exponent too large", at);
            AstPtr parent = std::make_unique<AstNode>(AstNode::Kind::power);
            parent->lhs = std::move(node);
            parent->exponent = std::stoul(digits);
            node = std::move(parent);
        }
        if (negated) {
            AstPtr parent = std::make_unique<AstNode>(AstNode::Kind::negation);
            parent->lhs = std::move(node);
            node = std::move(parent);
        }
        return node;
    }

    AstPtr parse_base() {
        if (at_end()) fail("unexpected end of input", pos_);
        const char c = peek();
        if (c == '(') {
            ++pos_;
            AstPtr inner = parse_expression();
            skip_whitespace();
            if (pos_ >= text_.size() || text_[pos_] != ')') {
                fail("expected ')'", pos_);
            }
            ++pos_;
            return inner;
        }
        if (c == 'x') {
            const std::size_t at = ++pos_;
            std::string digits = read_digits("variable index after 'x'");
            // A leading zero or an overlong run can never be a valid index.
            if (digits.size() > 7 || digits.front() == '0' ||
                std::stoul(digits) > dimension_) {
                fail("variable index x" + digits + " out of range for dimension " +
                         std::to_string(dimension_),
                     at);
            }
            AstPtr node = std::make_unique<AstNode>(AstNode::Kind::variable);
            node->index = std::stoul(digits) - 1;
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits("number");
            Rational value{mpz_class(num)};
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::size_t at = pos_;
                std::string den = read_digits("denominator");
                mpz_class d(den);
                if (d == 0) fail("zero denominator", at);
                value /= Rational(d);
            }
            AstPtr node = std::make_unique<AstNode>(AstNode::Kind::literal);
            node->literal_value = std::move(value);
            return node;
        }
        fail(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t dimension_;
};

Polynomial power(const Polynomial& base, unsigned long e) {
    Polynomial result = Polynomial::constant(base.dimension(), Rational(1));
    Polynomial square = base;
    while (e > 0) {
        if (e & 1UL) result = result * square;
        e >>= 1UL;
        if (e > 0) square = square * square;
    }
    return result;
}

Polynomial expand(const AstNode& node, std::size_t dimension) {
    switch (node.kind) {
        case AstNode::Kind::sum:
            return expand(*node.lhs, dimension) + expand(*node.rhs, dimension);
        case AstNode::Kind::difference:
            return expand(*node.lhs, dimension) - expand(*node.rhs, dimension);
        case AstNode::Kind::product:
            return expand(*node.lhs, dimension) * expand(*node.rhs, dimension);
        case AstNode::Kind::power:
            return power(expand(*node.lhs, dimension), node.exponent);
        case AstNode::Kind::negation:
            return -expand(*node.lhs, dimension);
        case AstNode::Kind::literal:
            return Polynomial::constant(dimension, node.literal_value);
        case AstNode::Kind::variable:
            return Polynomial::variable(dimension, node.index);
    }
    throw ValidationError("unreachable expression node");
}

}  // namespace

PolynomialExpression PolynomialExpression::parse(const std::string& text,
                                                 std::size_t dimension) {
    if (dimension == 0) throw ValidationError("dimension must be positive");
    Parser parser(text, dimension);
    AstPtr root = parser.run();
    return PolynomialExpression(text, expand(*root, dimension));
}

Polynomial parse_polynomial(const std::string& text, std::size_t dimension) {
    return PolynomialExpression::parse(text, dimension).value();
}

}  // namespace idealproj
