#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tri/ranking.hpp"

namespace tri {

/// Operations on rankings induced by the connectives: the ranking of ~f,
/// []1 f, []2 f, f | g, f & g computed from the rankings of f and g.
enum class PreorderOp { Neg, Box1, Box2, Join, Meet };

bool is_binary(PreorderOp op) noexcept;
std::string_view name(PreorderOp op) noexcept;

/// Neg swaps L1 and L3. Box1 moves L3 to L2 and L2 to L1. Box2 moves L2 to
/// L1. Join takes the better level per world, Meet the worse.
/// Throws std::invalid_argument if `second` is given for a unary op or
/// missing for a binary one, or if the rankings are over different 𝓘_n.
Ranking apply_op(PreorderOp op, const Ranking& r, const std::optional<Ranking>& second = std::nullopt);

/// Least set containing `generators` and closed under `ops`, sorted.
std::vector<Ranking> closure(std::span<const Ranking> generators, std::span<const PreorderOp> ops);

/// Ranking of x0 over 𝓘_1, serialized "321".
Ranking p0();
/// Ranking of bot over 𝓘_1, "333".
Ranking p_bot();

/// Rankings over 𝓘_1 unreachable with []1 alone (10 of them). Only n = 1 is
/// meaningful; other n throw std::invalid_argument.
std::vector<Ranking> family_F1(std::size_t n = 1);
/// Rankings over 𝓘_1 unreachable with []2 alone (15 of them).
std::vector<Ranking> family_F2(std::size_t n = 1);

enum class ModalVariant { Box1, Box2 };

struct NonDefinabilityReport {
    ModalVariant variant = ModalVariant::Box1;
    bool include_bot = false;
    std::vector<Ranking> closure;  ///< under neg, box_i, join, meet
    /// Closure without meet is identical; meet is derivable from neg and join.
    bool meet_redundant = true;
    std::vector<std::pair<Ranking, bool>> forbidden;  ///< member, reachable?
    std::vector<Ranking> unreachable;                 ///< all 27 minus closure
    bool disjoint = true;                             ///< no forbidden member reachable
};

/// Closes {P0} (and P_bot when include_bot) under neg, join, meet and the
/// variant's box over 𝓘_1 and intersects with F1 (box1) or F2 (box2).
NonDefinabilityReport verify_nondefinability(ModalVariant variant, bool include_bot);

/// Plain text; with `machine`, one "ranking IN|OUT" line per forbidden
/// member followed by "verdict DISJOINT|INTERSECTS".
std::string render_report(const NonDefinabilityReport& report, bool machine);

}  // namespace tri
