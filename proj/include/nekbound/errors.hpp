#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nekbound {

// Base for anything wrong with user-supplied input (files, streams).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& reason)
        : InputError("parse error at line " + std::to_string(line) + ": " + reason),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class NotSquareError : public InputError {
public:
    NotSquareError(std::size_t rows, std::size_t cols)
        : InputError("matrix is not square: " + std::to_string(rows) + "x" +
                     std::to_string(cols)) {}
};

class UnsupportedFormatError : public InputError {
public:
    using InputError::InputError;
};

class FileOpenError : public InputError {
public:
    explicit FileOpenError(const std::string& path)
        : InputError("cannot open file: " + path) {}
};

class UnknownNameError : public std::runtime_error {
public:
    explicit UnknownNameError(const std::string& name)
        : std::runtime_error("unknown builtin matrix: " + name) {}
};

// Raised by the row-sum recursions: h_i and z_i divide by |a_jj|.
class ZeroDiagonalError : public std::runtime_error {
public:
    explicit ZeroDiagonalError(std::size_t index)
        : std::runtime_error("zero diagonal entry at index " + std::to_string(index)),
          index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class NotSddError : public std::runtime_error {
public:
    NotSddError() : std::runtime_error("matrix is not strictly diagonally dominant") {}
};

class NotNekrasovError : public std::runtime_error {
public:
    NotNekrasovError() : std::runtime_error("matrix is not a Nekrasov matrix") {}
};

class SingularError : public std::runtime_error {
public:
    SingularError() : std::runtime_error("matrix is singular to working precision") {}
};

}  // namespace nekbound
