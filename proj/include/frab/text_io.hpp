#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <vector>

#include "frab/disord.hpp"
#include "frab/frab.hpp"
#include "frab/tabulation.hpp"

namespace frab {

namespace detail {

inline std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

inline bool is_integral_value(double v) {
    return v == std::rint(v) && std::abs(v) <= 9007199254740992.0;  // 2^53
}

inline std::string integer_string(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(v));
    return std::string(buf, r.ptr);
}

}  // namespace detail

/// Canonical text rendering of one coefficient: integral values print
/// without a decimal point, everything else in the shortest form that parses
/// back to the identical double.
inline std::string render_coefficient(double value) {
    if (detail::is_integral_value(value)) {
        return detail::integer_string(value);
    }
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, r.ptr);
}

/// Parses the two-column "symbol<TAB>value" format. Duplicate symbols are
/// summed and zero values dropped, exactly as from_pairs does; blank lines
/// are skipped.
inline Frab parse_frab_text(std::string_view text) {
    std::vector<std::pair<Symbol, Coefficient>> pairs;
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, (nl == std::string_view::npos ? text.size() : nl) - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw ParseError("expected symbol<TAB>value", line_number);
        }
        if (line.find('\t', tab + 1) != std::string_view::npos) {
            throw ParseError("more than one TAB", line_number);
        }
        const std::string_view name = line.substr(0, tab);
        if (name.empty()) {
            throw EmptySymbol("line " + std::to_string(line_number) + ": empty symbol");
        }
        const std::string_view number = line.substr(tab + 1);
        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(number.data(), number.data() + number.size(), value);
        if (ec != std::errc() || ptr != number.data() + number.size()) {
            throw ParseError("unparseable value '" + std::string(number) + "'", line_number);
        }
        if (!std::isfinite(value)) {
            throw NonFiniteCoefficient("line " + std::to_string(line_number) +
                                       ": non-finite value '" + std::string(number) + "'");
        }
        pairs.emplace_back(Symbol(std::string(name)), Coefficient(value));
    }
    return from_pairs(pairs);
}

/// One "symbol<TAB>value" line per entry, symbols ascending by byte order.
/// Output re-parses to an equal Frab.
inline std::string render_frab_text(const Frab& f) {
    std::string out;
    for (const auto& [symbol, value] : f.entries()) {
        out += symbol.str();
        out += '\t';
        out += render_coefficient(value);
        out += '\n';
    }
    return out;
}

/// Tokens separated by any run of whitespace; an empty text yields an empty
/// stream.
inline TokenStream parse_token_stream(std::string_view text) {
    TokenStream tokens;
    std::istringstream in{std::string(text)};
    std::string word;
    while (in >> word) {
        tokens.emplace_back(word);
    }
    return tokens;
}

/// One token per line.
inline std::string render_token_stream(const TokenStream& tokens) {
    std::string out;
    for (const auto& token : tokens) {
        out += token.str();
        out += '\n';
    }
    return out;
}

/// Display formatting shared by the value rows of frab and disord output: a
/// common format for the whole vector. All-integral vectors print as plain
/// integers; a vector with tiny or huge magnitudes switches to scientific
/// notation for every element; anything else prints fixed with a shared
/// number of decimals chosen for 7 significant digits.
inline std::vector<std::string> format_reals(const std::vector<double>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    if (values.empty()) {
        return out;
    }
    if (std::all_of(values.begin(), values.end(), detail::is_integral_value)) {
        for (const double v : values) {
            out.push_back(detail::integer_string(v));
        }
        return out;
    }
    double min_abs = 0.0;
    double max_abs = 0.0;
    bool seen_nonzero = false;
    for (const double v : values) {
        if (v == 0.0) {
            continue;
        }
        const double a = std::abs(v);
        min_abs = seen_nonzero ? std::min(min_abs, a) : a;
        max_abs = seen_nonzero ? std::max(max_abs, a) : a;
        seen_nonzero = true;
    }
    char buf[64];
    if (seen_nonzero && (min_abs < 1e-4 || max_abs >= 1e15)) {
        for (const double v : values) {
            std::snprintf(buf, sizeof buf, "%.6e", v);
            out.emplace_back(buf);
        }
        return out;
    }
    int decimals = 0;
    for (const double v : values) {
        std::snprintf(buf, sizeof buf, "%.7g", v);
        const std::string_view s{buf};
        const auto dot = s.find('.');
        if (dot != std::string_view::npos && s.find('e') == std::string_view::npos) {
            decimals = std::max(decimals, static_cast<int>(s.size() - dot - 1));
        }
    }
    for (const double v : values) {
        std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
        out.emplace_back(buf);
    }
    return out;
}

/// Header line, then symbols sorted ascending with their values aligned
/// beneath. Every column is right-aligned to a common width.
inline std::string display_frab(const Frab& f) {
    std::string out = "A frab object with entries\n";
    if (f.empty()) {
        return out;
    }
    std::vector<std::string> names;
    std::vector<double> values;
    names.reserve(f.size());
    values.reserve(f.size());
    for (const auto& [symbol, value] : f.entries()) {
        names.push_back(symbol.str());
        values.push_back(value);
    }
    const std::vector<std::string> cells = format_reals(values);
    std::size_t width = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        width = std::max({width, names[i].size(), cells[i].size()});
    }
    for (const auto& name : names) {
        out += detail::pad_left(name, width);
        out += ' ';
    }
    out += '\n';
    for (const auto& cell : cells) {
        out += detail::pad_left(cell, width);
        out += ' ';
    }
    out += '\n';
    return out;
}

/// Header with the 40-hex provenance token, the item listing, and the
/// trailing order disclaimer.
template <typename T>
std::string display_disord(const Disord<T>& d) {
    std::string out = "A disord object with hash " + d.token().hex() + " and elements\n";
    if (!d.empty()) {
        out += "[1]";
        if constexpr (std::is_same_v<T, bool>) {
            for (const bool item : d.elements()) {
                out += ' ';
                out += detail::pad_left(item ? "TRUE" : "FALSE", 5);
            }
        } else if constexpr (std::is_same_v<T, Symbol>) {
            for (const auto& item : d.elements()) {
                out += " \"" + item.str() + '"';
            }
        } else if constexpr (std::is_same_v<T, std::string>) {
            for (const auto& item : d.elements()) {
                out += " \"" + item + '"';
            }
        } else {
            static_assert(std::is_convertible_v<T, double>,
                          "no display rule for this element type");
            std::vector<double> values;
            values.reserve(d.size());
            for (const auto& item : d.elements()) {
                values.push_back(static_cast<double>(item));
            }
            const std::vector<std::string> cells = format_reals(values);
            std::size_t width = 0;
            for (const auto& cell : cells) {
                width = std::max(width, cell.size());
            }
            for (const auto& cell : cells) {
                out += ' ';
                out += detail::pad_left(cell, width);
            }
        }
        out += '\n';
    }
    out += "(in some order)\n";
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Frab& f) {
    return os << display_frab(f);
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Disord<T>& d) {
    return os << display_disord(d);
}

}  // namespace frab
