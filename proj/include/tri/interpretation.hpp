#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tri/truth_value.hpp"

namespace tri {

/// Largest variable count accepted by the enumeration code (3^16 worlds).
inline constexpr std::size_t kMaxVariables = 16;

/// 3^n; throws std::length_error when n exceeds kMaxVariables.
std::size_t world_count(std::size_t n);

/// Total assignment of truth values to x0..x(n-1).
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::vector<TruthValue> values) : values_(std::move(values)) {}

    /// The interpretation at `index` in canonical order over n variables:
    /// base-3 digits, digit order 0 < 1/2 < 1, x0 most significant.
    static Interpretation from_index(std::size_t index, std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    TruthValue operator[](std::size_t i) const { return values_[i]; }
    TruthValue at(std::size_t i) const { return values_.at(i); }
    std::span<const TruthValue> values() const noexcept { return values_; }

    /// Position in canonical order.
    std::size_t index() const;

    /// Digits joined by `separator`, e.g. "1 u 0" or "1,u,0".
    std::string to_string(char separator = ' ') const;

    friend bool operator==(const Interpretation&, const Interpretation&) = default;
    friend auto operator<=>(const Interpretation& a, const Interpretation& b) {
        return a.index() <=> b.index();
    }

private:
    std::vector<TruthValue> values_;
};

/// All 3^n interpretations in canonical order.
std::vector<Interpretation> enumerate_interpretations(std::size_t n);

/// Parses a command-line literal: digits from {0,u,1} separated by commas,
/// e.g. "1,u" (a single digit for n = 1). Throws std::invalid_argument.
Interpretation parse_interpretation(std::string_view literal);

}  // namespace tri
