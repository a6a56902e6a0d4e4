#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idealproj {

// Base class for everything thrown on purpose by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Parse failures carry a 1-based character position into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

// Raised when a functional set is linearly dependent; carries the 0-based
// index of the first functional in the span of its predecessors.
class DependentFunctionalsError : public Error {
public:
    DependentFunctionalsError(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}

    std::size_t offending_index() const { return index_; }

private:
    std::size_t index_;
};

}  // namespace idealproj
