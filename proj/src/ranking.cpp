#include "tri/ranking.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace tri {

Level level_from_int(int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("level must be 1, 2 or 3, got " + std::to_string(i));
    return static_cast<Level>(i);
}

Ranking::Ranking(std::size_t n, TruthColumn values) : n_(n), values_(std::move(values)) {
    if (values_.size() != world_count(n))
        throw std::invalid_argument("ranking over " + std::to_string(n) + " variable(s) needs " +
                                    std::to_string(world_count(n)) + " levels, got " +
                                    std::to_string(values_.size()));
}

Ranking Ranking::constant(std::size_t n, Level level) {
    return Ranking(n, TruthColumn(world_count(n), value_of(level)));
}

std::uint64_t ranking_count(std::size_t n) {
    if (n > 3) throw std::length_error("ranking enumeration is limited to n <= 3");
    std::uint64_t count = 1;
    for (std::size_t w = 0; w < world_count(n); ++w) count *= 3;
    return count;
}

Ranking Ranking::from_index(std::uint64_t index, std::size_t n) {
    if (index >= ranking_count(n)) throw std::out_of_range("ranking index out of range");
    TruthColumn values(world_count(n));
    for (std::size_t w = values.size(); w-- > 0;) {
        values[w] = value_of(static_cast<Level>(index % 3 + 1));
        index /= 3;
    }
    return Ranking(n, std::move(values));
}

std::uint64_t Ranking::index() const {
    std::uint64_t index = 0;
    for (TruthValue v : values_) index = index * 3 + static_cast<std::uint64_t>(index_of(level_of(v)) - 1);
    return index;
}

Ranking Ranking::parse(std::string_view levels) {
    std::size_t n = 0;
    while (world_count(n) < levels.size()) ++n;
    if (world_count(n) != levels.size())
        throw std::invalid_argument("ranking string '" + std::string(levels) +
                                    "' must have 3^n characters");
    TruthColumn values;
    values.reserve(levels.size());
    for (char c : levels) {
        if (c < '1' || c > '3')
            throw std::invalid_argument("ranking string '" + std::string(levels) +
                                        "' may only contain 1, 2, 3");
        values.push_back(value_of(static_cast<Level>(c - '0')));
    }
    return Ranking(n, std::move(values));
}

Level Ranking::level(const Interpretation& w) const {
    if (w.size() != n_) throw std::invalid_argument("interpretation size does not match ranking");
    return level(w.index());
}

std::vector<Interpretation> Ranking::members(Level l) const {
    std::vector<Interpretation> out;
    for (std::size_t w = 0; w < values_.size(); ++w)
        if (level_of(values_[w]) == l) out.push_back(Interpretation::from_index(w, n_));
    return out;
}

std::size_t Ranking::level_size(Level l) const { return count_value(values_, value_of(l)); }

std::string Ranking::serialize() const {
    std::string out;
    out.reserve(values_.size());
    for (TruthValue v : values_) out += static_cast<char>('0' + index_of(level_of(v)));
    return out;
}

std::string Ranking::to_file() const {
    std::string out;
    for (std::size_t w = 0; w < values_.size(); ++w) {
        out += Interpretation::from_index(w, n_).to_string(' ');
        out += n_ ? " : " : ": ";
        out += static_cast<char>('0' + index_of(level_of(values_[w])));
        out += '\n';
    }
    return out;
}

std::strong_ordering operator<=>(const Ranking& a, const Ranking& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    // Level order is the reverse of value order.
    return std::lexicographical_compare_three_way(
        a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end(),
        [](TruthValue x, TruthValue y) { return y <=> x; });
}

std::vector<Ranking> enumerate_rankings(std::size_t n) {
    const std::uint64_t count = ranking_count(n);
    std::vector<Ranking> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(Ranking::from_index(i, n));
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

Ranking parse_ranking_file(std::string_view text) {
    std::vector<std::pair<std::size_t, Level>> entries;
    std::optional<std::size_t> n;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        auto bad = [&](const std::string& why) {
            return std::invalid_argument("ranking file line " + std::to_string(line_no) + ": " + why);
        };
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw bad("expected 'd0 d1 ... : L'");
        const std::string_view level_part = trim(line.substr(colon + 1));
        if (level_part.size() != 1 || level_part[0] < '1' || level_part[0] > '3')
            throw bad("level must be 1, 2 or 3");

        std::vector<TruthValue> digits;
        for (char c : line.substr(0, colon)) {
            if (c == ' ' || c == '\t') continue;
            const auto v = truth_value_from_char(c);
            if (!v) throw bad(std::string("bad interpretation digit '") + c + "'");
            digits.push_back(*v);
        }
        if (!n) {
            n = digits.size();
            world_count(*n);
        } else if (digits.size() != *n) {
            throw bad("expected " + std::to_string(*n) + " digit(s)");
        }
        entries.emplace_back(Interpretation(std::move(digits)).index(),
                             static_cast<Level>(level_part[0] - '0'));
    }
    if (!n) throw std::invalid_argument("ranking file is empty");

    const std::size_t worlds = world_count(*n);
    std::vector<bool> seen(worlds, false);
    TruthColumn values(worlds);
    for (const auto& [w, level] : entries) {
        if (seen[w])
            throw std::invalid_argument("ranking file: duplicate interpretation " +
                                        Interpretation::from_index(w, *n).to_string(' '));
        seen[w] = true;
        values[w] = value_of(level);
    }
    if (const auto it = std::find(seen.begin(), seen.end(), false); it != seen.end())
        throw std::invalid_argument(
            "ranking file: missing interpretation " +
            Interpretation::from_index(static_cast<std::size_t>(it - seen.begin()), *n).to_string(' '));
    return Ranking(*n, std::move(values));
}

Ranking ranking_of_formula(const Formula& f, std::size_t n) { return Ranking(n, eval_all(f, n)); }

Formula capture_valuation(const Interpretation& w) {
    if (w.size() == 0) throw std::invalid_argument("capture_valuation: empty interpretation");
    Formula conj;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Formula x = Formula::var(i);
        Formula clause;
        switch (w[i]) {
            case TruthValue::One: clause = x; break;
            case TruthValue::Zero: clause = ~x; break;
            case TruthValue::Half: clause = undetermined(x); break;
        }
        conj = i == 0 ? std::move(clause) : std::move(conj) & std::move(clause);
    }
    return conj;
}

Formula capture_set(std::span<const Interpretation> worlds, std::size_t n) {
    Formula disj = Formula::bot();
    bool first = true;
    for (const Interpretation& w : worlds) {
        if (w.size() != n)
            throw std::invalid_argument("capture_set: interpretation " + w.to_string(',') +
                                        " is not over " + std::to_string(n) + " variable(s)");
        Formula term = capture_valuation(w);
        disj = first ? std::move(term) : std::move(disj) | std::move(term);
        first = false;
    }
    return disj;
}

Formula formula_of_ranking(const Ranking& r) {
    if (r.variables() == 0) throw std::invalid_argument("formula_of_ranking: n must be at least 1");
    const std::size_t n = r.variables();
    const Formula psi2 = capture_set(r.members(Level::L2), n);
    const Formula psi3 = capture_set(r.members(Level::L3), n);
    return ~(dia1(psi2) | dia2(psi3));
}

}  // namespace tri
