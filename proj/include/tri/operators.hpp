#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tri/formula.hpp"
#include "tri/ranking.hpp"

namespace tri {

/// A belief-change operator given by the output level for each pair
/// (level in the old state phi, level in the input theta).
class OperatorTable {
public:
    static constexpr std::uint32_t kCount = 19683;  // 3^9

    explicit OperatorTable(const std::array<Level, 9>& cells) : cells_(cells) {}

    /// Nine characters from {1,2,3}, row-major (rows: phi level, columns:
    /// theta level), or one of the aliases "ci" and "drastic".
    /// Throws std::invalid_argument.
    static OperatorTable parse(std::string_view text);

    /// The index-th table in serialization order, index < kCount.
    static OperatorTable from_index(std::uint32_t index);

    Level operator()(Level phi, Level theta) const noexcept {
        return cells_[static_cast<std::size_t>(3 * (index_of(phi) - 1) + index_of(theta) - 1)];
    }
    /// 1-based cell access; throws std::invalid_argument.
    Level at(int phi_level, int theta_level) const;

    std::string serialize() const;
    std::uint32_t index() const noexcept;

    friend bool operator==(const OperatorTable&, const OperatorTable&) = default;

private:
    std::array<Level, 9> cells_;
};

/// Cautious improvement, "122123223".
OperatorTable ci_table();
/// Output is always the input's level, "123123123".
OperatorTable drastic_table();

/// level(w) = t(phi.level(w), theta.level(w)). Throws std::invalid_argument
/// if the rankings are over different 𝓘_n.
Ranking apply_semantic(const OperatorTable& t, const Ranking& phi, const Ranking& theta);

/// The formula of apply_semantic(t, ranking of f, ranking of g).
Formula revise(const OperatorTable& t, const Formula& f, const Formula& g, std::size_t n);

/// f, []1 f & []1 ~f, ~f for L1, L2, L3: value 1 exactly on L_level(f).
Formula level_selector(Level level, const Formula& f);

/// bot unless t(i, j) == target, else level_selector(i, f) & level_selector(j, g).
Formula zeta(const OperatorTable& t, Level i, Level j, Level target, const Formula& f,
             const Formula& g);

/// Disjunction of zeta over all nine (i, j), row-major. Bot disjuncts are
/// kept, so the shape does not depend on t.
Formula postulate_formula(const OperatorTable& t, Level target, const Formula& f, const Formula& g);

/// Right-hand side of the postulate for `target`, applied to the result h:
/// h, []1 h & []1 ~h, ~h.
Formula postulate_rhs(Level target, const Formula& result);

/// The table pinned down by the three postulates: for each cell, evaluates
/// the left-hand sides at a world of that level pair (phi = x0, theta = x1
/// over 𝓘_2 visits every pair once). Empty if some cell is not pinned to
/// exactly one level.
std::optional<OperatorTable> reconstruct_table(const OperatorTable& t);

struct CharacterizationReport {
    struct Failure {
        Ranking phi;
        Ranking theta;
        Level target;
    };

    std::size_t pairs_checked = 0;
    bool sound = true;   ///< postulate models match the semantic levels
    bool unique = true;  ///< the postulates reconstruct t
    std::optional<Failure> failure;

    bool holds() const noexcept { return sound && unique; }
};

/// Exhaustive over every pair of rankings over 𝓘_n (729 pairs at n = 1):
/// for each target level, the models of postulate_formula equal both the
/// models of postulate_rhs(target, revise(...)) and L_target of
/// apply_semantic. Plus the uniqueness direction via reconstruct_table.
CharacterizationReport check_characterization(const OperatorTable& t, std::size_t n);

/// The same check on the single generic pair (x0, x1) over 𝓘_2. Postulate
/// truth at a world depends only on its level pair, and that pair covers all
/// nine, so this is complete per cell and cheap enough for all 3^9 tables.
CharacterizationReport check_characterization_cells(const OperatorTable& t);

struct SweepReport {
    std::size_t tables = 0;
    std::size_t full_checks = 0;
    std::vector<OperatorTable> failures;
};

/// Cell-level check of every table, plus check_characterization at n for
/// ci, drastic and `full_samples` random tables.
SweepReport sweep_all_operators(std::size_t n, std::size_t full_samples, std::uint64_t seed);

/// Where ranking pairs come from: every pair (default), or a uniform sample.
struct PairSampling {
    std::optional<std::size_t> samples;
    std::uint64_t seed = 1;
};

struct PostulateResult {
    struct Witness {
        Ranking phi;
        Ranking theta;
    };

    std::string name;
    bool holds = true;
    std::optional<Witness> witness;
};

struct CiReport {
    std::size_t n = 0;
    std::size_t pairs = 0;
    /// CI1, CI2, CI1', CI2' (same models); CI3, CI7, CI8 (same truth table);
    /// CI4, CI5, CI6.
    std::vector<PostulateResult> results;
    /// CI1' read as equality of truth tables rather than of models. Expected
    /// to fail: at phi = 1, theta = 0 the operator gives 1/2, []1 phi & theta 0.
    PostulateResult ci1_prime_truth_table;
    /// phi and theta values at the first world where the tables differ.
    std::optional<std::pair<TruthValue, TruthValue>> ci1_prime_cell;

    bool all_hold() const;
};

/// Throws std::invalid_argument for n = 0, and std::length_error when the
/// exhaustive pair space is too large (use sampling from n = 2 on).
CiReport check_ci_postulates(std::size_t n, PairSampling sampling = {});

}  // namespace tri
