#pragma once

#include <cmath>
#include <compare>
#include <string>
#include <utility>

#include "frab/errors.hpp"

namespace frab {

/// A generator name: a non-empty byte string, compared and ordered by exact
/// byte content.
class Symbol {
public:
    Symbol(std::string text) : text_(std::move(text)) {
        if (text_.empty()) {
            throw EmptySymbol();
        }
    }

    Symbol(const char* text) : Symbol(std::string(text)) {}

    const std::string& str() const noexcept { return text_; }

    friend auto operator<=>(const Symbol&, const Symbol&) = default;

private:
    std::string text_;
};

/// A finite real weight. NaN and infinities are rejected on construction, so
/// stored coefficients always support exact comparison and negation.
class Coefficient {
public:
    Coefficient(double value) : value_(value) {
        if (!std::isfinite(value_)) {
            throw NonFiniteCoefficient("coefficient must be finite");
        }
    }

    constexpr double value() const noexcept { return value_; }
    constexpr operator double() const noexcept { return value_; }

private:
    double value_;
};

}  // namespace frab
