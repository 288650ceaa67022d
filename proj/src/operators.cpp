#include "tri/operators.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "tri/kernels.hpp"
#include "tri/semantics.hpp"

namespace tri {

OperatorTable OperatorTable::parse(std::string_view text) {
    if (text == "ci") return ci_table();
    if (text == "drastic") return drastic_table();
    if (text.size() != 9)
        throw std::invalid_argument("operator table '" + std::string(text) +
                                    "' must be 9 characters from {1,2,3} or ci/drastic");
    std::array<Level, 9> cells{};
    for (std::size_t i = 0; i < 9; ++i) {
        if (text[i] < '1' || text[i] > '3')
            throw std::invalid_argument("operator table '" + std::string(text) +
                                        "' may only contain 1, 2, 3");
        cells[i] = static_cast<Level>(text[i] - '0');
    }
    return OperatorTable(cells);
}

OperatorTable OperatorTable::from_index(std::uint32_t index) {
    if (index >= kCount) throw std::out_of_range("operator table index out of range");
    std::array<Level, 9> cells{};
    for (std::size_t i = 9; i-- > 0;) {
        cells[i] = static_cast<Level>(index % 3 + 1);
        index /= 3;
    }
    return OperatorTable(cells);
}

Level OperatorTable::at(int phi_level, int theta_level) const {
    return (*this)(level_from_int(phi_level), level_from_int(theta_level));
}

std::string OperatorTable::serialize() const {
    std::string out;
    for (Level l : cells_) out += static_cast<char>('0' + index_of(l));
    return out;
}

std::uint32_t OperatorTable::index() const noexcept {
    std::uint32_t index = 0;
    for (Level l : cells_) index = index * 3 + static_cast<std::uint32_t>(index_of(l) - 1);
    return index;
}

OperatorTable ci_table() { return OperatorTable::parse("122123223"); }
OperatorTable drastic_table() { return OperatorTable::parse("123123123"); }

Ranking apply_semantic(const OperatorTable& t, const Ranking& phi, const Ranking& theta) {
    if (phi.variables() != theta.variables())
        throw std::invalid_argument("apply_semantic: rankings over " + std::to_string(phi.variables()) +
                                    " and " + std::to_string(theta.variables()) + " variables");
    kernels::Lut lut{};
    for (TruthValue a : kTruthValues)
        for (TruthValue b : kTruthValues)
            lut[3 * code(a) + code(b)] = code(value_of(t(level_of(a), level_of(b))));
    TruthColumn out(phi.worlds());
    kernels::active().map_binary(lut, reinterpret_cast<const std::uint8_t*>(phi.values().data()),
                                 reinterpret_cast<const std::uint8_t*>(theta.values().data()),
                                 reinterpret_cast<std::uint8_t*>(out.data()), out.size());
    return Ranking(phi.variables(), std::move(out));
}

Formula revise(const OperatorTable& t, const Formula& f, const Formula& g, std::size_t n) {
    Evaluator ev(n);
    const Ranking rf(n, ev(f));
    const Ranking rg(n, ev(g));
    return formula_of_ranking(apply_semantic(t, rf, rg));
}

Formula level_selector(Level level, const Formula& f) {
    switch (level) {
        case Level::L1: return f;
        case Level::L2: return undetermined(f);
        case Level::L3: return ~f;
    }
    throw std::logic_error("bad level");
}

Formula zeta(const OperatorTable& t, Level i, Level j, Level target, const Formula& f,
             const Formula& g) {
    if (t(i, j) != target) return Formula::bot();
    return level_selector(i, f) & level_selector(j, g);
}

Formula postulate_formula(const OperatorTable& t, Level target, const Formula& f, const Formula& g) {
    Formula disj;
    bool first = true;
    for (Level i : kLevels) {
        for (Level j : kLevels) {
            Formula z = zeta(t, i, j, target, f, g);
            disj = first ? std::move(z) : std::move(disj) | std::move(z);
            first = false;
        }
    }
    return disj;
}

Formula postulate_rhs(Level target, const Formula& result) { return level_selector(target, result); }

namespace {

// Indicator of L_level: value 1 on its members, 0 elsewhere.
TruthColumn level_indicator(const Ranking& r, Level level) {
    TruthColumn out(r.worlds());
    for (std::size_t w = 0; w < out.size(); ++w)
        out[w] = r.level(w) == level ? TruthValue::One : TruthValue::Zero;
    return out;
}

// Checks all three postulates for one pair; returns the failing target.
std::optional<Level> check_pair(const OperatorTable& t, const Ranking& rf, const Ranking& rg,
                                const Formula& f, const Formula& g, bool with_rhs) {
    const std::size_t n = rf.variables();
    const Ranking expected = apply_semantic(t, rf, rg);
    Evaluator ev(n);
    std::optional<Formula> result;
    if (with_rhs) result = formula_of_ranking(expected);
    for (Level k : kLevels) {
        const TruthColumn& lhs = ev(postulate_formula(t, k, f, g));
        if (!same_models(lhs, level_indicator(expected, k))) return k;
        if (result && !same_models(lhs, ev(postulate_rhs(k, *result)))) return k;
    }
    return std::nullopt;
}

}  // namespace

std::optional<OperatorTable> reconstruct_table(const OperatorTable& t) {
    const Formula f = Formula::var(0);
    const Formula g = Formula::var(1);
    Evaluator ev(2);
    std::array<const TruthColumn*, 3> lhs{};
    for (Level k : kLevels) lhs[static_cast<std::size_t>(index_of(k) - 1)] = &ev(postulate_formula(t, k, f, g));

    std::array<Level, 9> cells{};
    for (std::size_t w = 0; w < 9; ++w) {
        const Interpretation world = Interpretation::from_index(w, 2);
        const Level i = level_of(world[0]);
        const Level j = level_of(world[1]);
        std::optional<Level> pinned;
        for (Level k : kLevels) {
            if ((*lhs[static_cast<std::size_t>(index_of(k) - 1)])[w] != TruthValue::One) continue;
            if (pinned) return std::nullopt;
            pinned = k;
        }
        if (!pinned) return std::nullopt;
        cells[static_cast<std::size_t>(3 * (index_of(i) - 1) + index_of(j) - 1)] = *pinned;
    }
    return OperatorTable(cells);
}

CharacterizationReport check_characterization(const OperatorTable& t, std::size_t n) {
    if (n == 0) throw std::invalid_argument("check_characterization: n must be at least 1");
    const std::vector<Ranking> rankings = enumerate_rankings(n);
    std::vector<Formula> formulas;
    formulas.reserve(rankings.size());
    for (const Ranking& r : rankings) formulas.push_back(formula_of_ranking(r));

    CharacterizationReport report;
    for (std::size_t a = 0; a < rankings.size() && report.sound; ++a) {
        for (std::size_t b = 0; b < rankings.size(); ++b) {
            ++report.pairs_checked;
            if (auto bad = check_pair(t, rankings[a], rankings[b], formulas[a], formulas[b], true)) {
                report.sound = false;
                report.failure = CharacterizationReport::Failure{rankings[a], rankings[b], *bad};
                break;
            }
        }
    }
    const auto rebuilt = reconstruct_table(t);
    report.unique = rebuilt && *rebuilt == t;
    return report;
}

CharacterizationReport check_characterization_cells(const OperatorTable& t) {
    const Formula f = Formula::var(0);
    const Formula g = Formula::var(1);
    const Ranking rf = ranking_of_formula(f, 2);
    const Ranking rg = ranking_of_formula(g, 2);

    CharacterizationReport report;
    report.pairs_checked = 1;
    if (auto bad = check_pair(t, rf, rg, f, g, false)) {
        report.sound = false;
        report.failure = CharacterizationReport::Failure{rf, rg, *bad};
    }
    const auto rebuilt = reconstruct_table(t);
    report.unique = rebuilt && *rebuilt == t;
    return report;
}

SweepReport sweep_all_operators(std::size_t n, std::size_t full_samples, std::uint64_t seed) {
    SweepReport report;
    for (std::uint32_t i = 0; i < OperatorTable::kCount; ++i) {
        const OperatorTable t = OperatorTable::from_index(i);
        ++report.tables;
        if (!check_characterization_cells(t).holds()) report.failures.push_back(t);
    }

    std::vector<OperatorTable> full{ci_table(), drastic_table()};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, OperatorTable::kCount - 1);
    for (std::size_t s = 0; s < full_samples; ++s) full.push_back(OperatorTable::from_index(pick(rng)));
    for (const OperatorTable& t : full) {
        ++report.full_checks;
        if (!check_characterization(t, n).holds()) report.failures.push_back(t);
    }
    return report;
}

bool CiReport::all_hold() const {
    for (const auto& r : results)
        if (!r.holds) return false;
    return true;
}

CiReport check_ci_postulates(std::size_t n, PairSampling sampling) {
    if (n == 0) throw std::invalid_argument("check_ci_postulates: n must be at least 1");
    const OperatorTable ci = ci_table();
    const std::uint64_t count = ranking_count(n);

    CiReport report;
    report.n = n;
    for (const char* name : {"CI1", "CI2", "CI3", "CI4", "CI5", "CI6", "CI7", "CI8", "CI1'", "CI2'"})
        report.results.push_back(PostulateResult{name, true, std::nullopt});
    report.ci1_prime_truth_table = PostulateResult{"CI1' (truth table)", true, std::nullopt};

    auto record = [](PostulateResult& r, bool ok, const Ranking& a, const Ranking& b) {
        if (ok || !r.holds) return;
        r.holds = false;
        r.witness = PostulateResult::Witness{a, b};
    };

    // Formulas of rankings are reused across pairs when enumerating.
    std::vector<std::optional<Formula>> formula_cache;
    const bool exhaustive = !sampling.samples;
    if (exhaustive) {
        if (count > 1024) throw std::length_error("exhaustive CI check over 𝓘_" + std::to_string(n) +
                                                  " is too large; sample pairs instead");
        formula_cache.resize(static_cast<std::size_t>(count));
    }
    auto formula_for = [&](const Ranking& r) -> Formula {
        if (!exhaustive) return formula_of_ranking(r);
        auto& slot = formula_cache[static_cast<std::size_t>(r.index())];
        if (!slot) slot = formula_of_ranking(r);
        return *slot;
    };

    auto check = [&](const Ranking& rf, const Ranking& rg) {
        ++report.pairs;
        const Formula f = formula_for(rf);
        const Formula g = formula_for(rg);
        const Formula star = revise(ci, f, g, n);
        Evaluator ev(n);
        const TruthColumn& s = ev(star);
        const TruthColumn& gc = ev(g);
        auto& res = report.results;

        record(res[0], same_models(ev((f & g) | (undetermined(f) & g)), s), rf, rg);
        record(res[1], same_models(ev((undetermined(f) & ~g) | (~f & ~g)), ev(~star)), rf, rg);
        record(res[2], columns_equal(ev(~star), ev(revise(ci, ~f, ~g, n))), rf, rg);
        const bool g_contradiction = count_value(gc, TruthValue::Zero) == gc.size();
        const bool s_contradiction = count_value(s, TruthValue::Zero) == s.size();
        record(res[3], g_contradiction || !s_contradiction, rf, rg);
        record(res[4], models_subset(s, gc), rf, rg);
        record(res[5], models_subset(ev(f), ev(box1(star))), rf, rg);
        record(res[6], columns_equal(ev(revise(ci, star, g, n)), gc), rf, rg);
        record(res[7], columns_equal(ev(revise(ci, g, g, n)), gc), rf, rg);
        const TruthColumn& closed1 = ev(box1(f) & g);
        record(res[8], same_models(s, closed1), rf, rg);
        record(res[9], same_models(ev(~star), ev(box1(~f) & ~g)), rf, rg);

        const bool was_holding = report.ci1_prime_truth_table.holds;
        record(report.ci1_prime_truth_table, columns_equal(s, closed1), rf, rg);
        if (was_holding && !report.ci1_prime_truth_table.holds) {
            const TruthColumn& fc = ev(f);
            for (std::size_t w = 0; w < s.size(); ++w)
                if (s[w] != closed1[w]) {
                    report.ci1_prime_cell = std::pair{fc[w], gc[w]};
                    break;
                }
        }
    };

    if (exhaustive) {
        for (std::uint64_t a = 0; a < count; ++a)
            for (std::uint64_t b = 0; b < count; ++b)
                check(Ranking::from_index(a, n), Ranking::from_index(b, n));
    } else {
        std::mt19937_64 rng(sampling.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
        for (std::size_t s = 0; s < *sampling.samples; ++s) {
            const Ranking rf = Ranking::from_index(pick(rng), n);
            const Ranking rg = Ranking::from_index(pick(rng), n);
            check(rf, rg);
        }
    }
    return report;
}

}  // namespace tri
