#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tri/formula.hpp"
#include "tri/interpretation.hpp"
#include "tri/semantics.hpp"

namespace tri {

/// Plausibility level: L1 accepted, L2 undetermined, L3 rejected.
enum class Level : std::uint8_t { L1 = 1, L2 = 2, L3 = 3 };

inline constexpr Level kLevels[] = {Level::L1, Level::L2, Level::L3};

constexpr int index_of(Level l) noexcept { return static_cast<int>(l); }
constexpr Level level_of(TruthValue v) noexcept { return static_cast<Level>(3 - code(v)); }
constexpr TruthValue value_of(Level l) noexcept {
    return from_code(static_cast<std::uint8_t>(3 - index_of(l)));
}
/// Throws std::invalid_argument outside 1..3.
Level level_from_int(int i);

/// Three-level ranking function over 𝓘_n.
///
/// Stored as the ranking's value function into {0, 1/2, 1} (level 1 is value
/// 1), which makes a formula's ranking literally its truth column.
class Ranking {
public:
    /// Throws std::invalid_argument unless values has 3^n entries.
    Ranking(std::size_t n, TruthColumn values);

    static Ranking constant(std::size_t n, Level level);

    /// The index-th ranking over 𝓘_n in serialization order; there are
    /// 3^(3^n) of them (see ranking_count).
    static Ranking from_index(std::uint64_t index, std::size_t n);

    /// Inverse of serialize(); n is inferred from the length (1, 3, 9, 27,
    /// ...). Throws std::invalid_argument.
    static Ranking parse(std::string_view levels);

    std::size_t variables() const noexcept { return n_; }
    std::size_t worlds() const noexcept { return values_.size(); }

    Level level(std::size_t world) const { return level_of(values_.at(world)); }
    Level level(const Interpretation& w) const;

    /// r(w) in {0, 1/2, 1}.
    const TruthColumn& values() const noexcept { return values_; }

    /// Members of level L_j, canonical order.
    std::vector<Interpretation> members(Level level) const;
    std::size_t level_size(Level level) const;

    /// Level digits in canonical world order, e.g. "321" for the ranking of x0.
    std::string serialize() const;
    std::uint64_t index() const;

    /// Ranking file: one line per interpretation, "d0 d1 ... : L".
    std::string to_file() const;

    friend bool operator==(const Ranking&, const Ranking&) = default;
    friend std::strong_ordering operator<=>(const Ranking& a, const Ranking& b);

private:
    std::size_t n_;
    TruthColumn values_;
};

/// 3^(3^n); throws std::length_error for n > 3.
std::uint64_t ranking_count(std::size_t n);
std::vector<Ranking> enumerate_rankings(std::size_t n);

/// Loads the ranking file format; every interpretation of some 𝓘_n must
/// appear exactly once. Blank lines and lines starting with '#' are skipped.
Ranking parse_ranking_file(std::string_view text);

Ranking ranking_of_formula(const Formula& f, std::size_t n);

/// Conjunction whose only model is w: per variable x_i, ~x_i or
/// []1 x_i & []1 ~x_i according to w(x_i) = 1, 0, 1/2. Rejects n = 0.
Formula capture_valuation(const Interpretation& w);

/// Disjunction of capture_valuation over `worlds`, whose models are exactly
/// `worlds`; bot for the empty set.
Formula capture_set(std::span<const Interpretation> worlds, std::size_t n);

/// A formula whose ranking is R: ~(<>1 psi2 | <>2 psi3) with psi_j capturing
/// L_j(R). Rejects n = 0.
Formula formula_of_ranking(const Ranking& r);

}  // namespace tri
