#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>

namespace tri {

// Values are stored as their rank in the order 0 < 1/2 < 1, so the
// underlying byte doubles as a table index in the evaluation kernels.
enum class TruthValue : std::uint8_t { Zero = 0, Half = 1, One = 2 };

inline constexpr std::array<TruthValue, 3> kTruthValues = {TruthValue::Zero, TruthValue::Half,
                                                          TruthValue::One};

constexpr std::uint8_t code(TruthValue v) noexcept { return static_cast<std::uint8_t>(v); }

constexpr TruthValue from_code(std::uint8_t c) noexcept { return static_cast<TruthValue>(c); }

constexpr auto operator<=>(TruthValue a, TruthValue b) noexcept { return code(a) <=> code(b); }

constexpr TruthValue meet(TruthValue a, TruthValue b) noexcept { return a < b ? a : b; }
constexpr TruthValue join(TruthValue a, TruthValue b) noexcept { return a < b ? b : a; }
constexpr TruthValue negate(TruthValue a) noexcept { return from_code(2 - code(a)); }

/// Kleene strong implication.
TruthValue implies(TruthValue a, TruthValue b) noexcept;

TruthValue diamond1(TruthValue a) noexcept;
TruthValue box1(TruthValue a) noexcept;
TruthValue diamond2(TruthValue a) noexcept;
TruthValue box2(TruthValue a) noexcept;

/// '0', 'u' or '1'.
char to_char(TruthValue v) noexcept;
std::optional<TruthValue> truth_value_from_char(char c) noexcept;

std::ostream& operator<<(std::ostream& os, TruthValue v);

}  // namespace tri
