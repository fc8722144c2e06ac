#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frab {

/// Base class of every error thrown by this library.
class FrabError : public std::runtime_error {
public:
    explicit FrabError(const std::string& what) : std::runtime_error(what) {}
};

/// An empty string was supplied where a symbol is required.
class EmptySymbol : public FrabError {
public:
    EmptySymbol() : FrabError("symbol must be a non-empty string") {}
    explicit EmptySymbol(const std::string& what) : FrabError(what) {}
};

/// A NaN or infinite value reached a coefficient construction site.
class NonFiniteCoefficient : public FrabError {
public:
    explicit NonFiniteCoefficient(const std::string& what) : FrabError(what) {}
};

/// A negative tolerance was passed to zap().
class NegativeTolerance : public FrabError {
public:
    explicit NegativeTolerance(const std::string& what) : FrabError(what) {}
};

/// Violation of disord discipline: positional access, or elementwise work
/// between collections not known to share a hidden order.
class DisciplineError : public FrabError {
public:
    explicit DisciplineError(const std::string& what) : FrabError(what) {}
};

/// Elementwise work between collections whose lengths cannot be aligned.
class LengthMismatch : public FrabError {
public:
    explicit LengthMismatch(const std::string& what) : FrabError(what) {}
};

/// reconstruct() met a negative entry.
class NegativeCount : public FrabError {
public:
    explicit NegativeCount(const std::string& what) : FrabError(what) {}
};

/// reconstruct() met an entry too far from an integer.
class NonIntegralCount : public FrabError {
public:
    explicit NonIntegralCount(const std::string& what) : FrabError(what) {}
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public FrabError {
public:
    ParseError(const std::string& what, std::size_t line)
        : FrabError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace frab
