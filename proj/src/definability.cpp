#include "tri/definability.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

#include "tri/kernels.hpp"

namespace tri {

bool is_binary(PreorderOp op) noexcept { return op == PreorderOp::Join || op == PreorderOp::Meet; }

std::string_view name(PreorderOp op) noexcept {
    switch (op) {
        case PreorderOp::Neg: return "neg";
        case PreorderOp::Box1: return "box1";
        case PreorderOp::Box2: return "box2";
        case PreorderOp::Join: return "join";
        case PreorderOp::Meet: return "meet";
    }
    return "?";
}

namespace {

const std::uint8_t* bytes(const Ranking& r) {
    return reinterpret_cast<const std::uint8_t*>(r.values().data());
}

kernels::Lut level_map(std::array<Level, 3> image) {
    kernels::Lut lut{};
    for (Level l : kLevels)
        lut[code(value_of(l))] = code(value_of(image[static_cast<std::size_t>(index_of(l) - 1)]));
    return lut;
}

}  // namespace

Ranking apply_op(PreorderOp op, const Ranking& r, const std::optional<Ranking>& second) {
    if (is_binary(op) != second.has_value())
        throw std::invalid_argument(std::string("apply_op: ") + std::string(name(op)) +
                                    (is_binary(op) ? " needs two rankings" : " takes one ranking"));
    const kernels::KernelSet& k = kernels::active();
    TruthColumn out(r.worlds());
    auto* dst = reinterpret_cast<std::uint8_t*>(out.data());

    static const kernels::Lut neg = level_map({Level::L3, Level::L2, Level::L1});
    static const kernels::Lut up1 = level_map({Level::L1, Level::L1, Level::L2});
    static const kernels::Lut up2 = level_map({Level::L1, Level::L1, Level::L3});
    switch (op) {
        case PreorderOp::Neg: k.map_unary(neg, bytes(r), dst, out.size()); break;
        case PreorderOp::Box1: k.map_unary(up1, bytes(r), dst, out.size()); break;
        case PreorderOp::Box2: k.map_unary(up2, bytes(r), dst, out.size()); break;
        case PreorderOp::Join:
        case PreorderOp::Meet:
            if (second->variables() != r.variables())
                throw std::invalid_argument("apply_op: rankings over different variable counts");
            // A better level is a larger value.
            if (op == PreorderOp::Join)
                k.max(bytes(r), bytes(*second), dst, out.size());
            else
                k.min(bytes(r), bytes(*second), dst, out.size());
            break;
    }
    return Ranking(r.variables(), std::move(out));
}

std::vector<Ranking> closure(std::span<const Ranking> generators, std::span<const PreorderOp> ops) {
    std::vector<Ranking> found;
    std::unordered_map<std::string, std::size_t> interned;
    auto add = [&](Ranking r) {
        if (!found.empty() && r.variables() != found.front().variables())
            throw std::invalid_argument("closure: generators over different variable counts");
        if (interned.emplace(r.serialize(), found.size()).second) found.push_back(std::move(r));
    };
    for (const Ranking& g : generators) add(g);

    // Worklist: when element i is processed it is combined with every
    // element before it (and itself), so each pair is seen once.
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (PreorderOp op : ops) {
            if (!is_binary(op)) {
                add(apply_op(op, found[i]));
                continue;
            }
            for (std::size_t j = 0; j <= i; ++j) {
                add(apply_op(op, found[i], found[j]));
                add(apply_op(op, found[j], found[i]));
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

Ranking p0() { return Ranking::parse("321"); }
Ranking p_bot() { return Ranking::parse("333"); }

namespace {

// World index 1 over 𝓘_1 is the all-1/2 interpretation.
constexpr std::size_t kHalfWorld = 1;

struct Shape {
    std::size_t l1, l2, l3;
    bool operator==(const Shape&) const = default;
};

Shape shape(const Ranking& r) {
    return {r.level_size(Level::L1), r.level_size(Level::L2), r.level_size(Level::L3)};
}

bool linear_with_half_at_extreme(const Ranking& r) {
    return shape(r) == Shape{1, 1, 1} && r.level(kHalfWorld) != Level::L2;
}

template <class Pred>
std::vector<Ranking> select_n1(std::size_t n, Pred pred) {
    if (n != 1) throw std::invalid_argument("forbidden families are defined over one variable only");
    std::vector<Ranking> out;
    for (Ranking& r : enumerate_rankings(1))
        if (pred(r)) out.push_back(std::move(r));
    return out;
}

}  // namespace

std::vector<Ranking> family_F1(std::size_t n) {
    return select_n1(n, [](const Ranking& r) {
        const Shape s = shape(r);
        return linear_with_half_at_extreme(r) || s == Shape{2, 0, 1} || s == Shape{1, 0, 2};
    });
}

std::vector<Ranking> family_F2(std::size_t n) {
    return select_n1(n, [](const Ranking& r) {
        const Shape s = shape(r);
        const Level half = r.level(kHalfWorld);
        return linear_with_half_at_extreme(r) || s == Shape{0, 3, 0} ||
               (s == Shape{2, 1, 0} && half == Level::L1) ||
               (s == Shape{0, 1, 2} && half == Level::L3) || s == Shape{1, 2, 0} ||
               s == Shape{0, 2, 1};
    });
}

NonDefinabilityReport verify_nondefinability(ModalVariant variant, bool include_bot) {
    NonDefinabilityReport report;
    report.variant = variant;
    report.include_bot = include_bot;

    std::vector<Ranking> generators{p0()};
    if (include_bot) generators.push_back(p_bot());
    const PreorderOp box = variant == ModalVariant::Box1 ? PreorderOp::Box1 : PreorderOp::Box2;
    const std::array with_meet{PreorderOp::Neg, box, PreorderOp::Join, PreorderOp::Meet};
    const std::array without_meet{PreorderOp::Neg, box, PreorderOp::Join};

    report.closure = closure(generators, with_meet);
    report.meet_redundant = report.closure == closure(generators, without_meet);

    auto reachable = [&](const Ranking& r) {
        return std::binary_search(report.closure.begin(), report.closure.end(), r);
    };
    for (Ranking& r : variant == ModalVariant::Box1 ? family_F1() : family_F2()) {
        const bool in = reachable(r);
        report.disjoint = report.disjoint && !in;
        report.forbidden.emplace_back(std::move(r), in);
    }
    for (Ranking& r : enumerate_rankings(1))
        if (!reachable(r)) report.unreachable.push_back(std::move(r));
    return report;
}

std::string render_report(const NonDefinabilityReport& report, bool machine) {
    const char* family = report.variant == ModalVariant::Box1 ? "F1" : "F2";
    std::string out;
    if (machine) {
        for (const auto& [r, in] : report.forbidden) out += r.serialize() + (in ? " IN\n" : " OUT\n");
        out += report.disjoint ? "verdict DISJOINT\n" : "verdict INTERSECTS\n";
        return out;
    }
    const char* box = report.variant == ModalVariant::Box1 ? "box1" : "box2";
    out += std::string("generators: ") + (report.include_bot ? "P0 = 321, Pbot = 333" : "P0 = 321") + '\n';
    out += std::string("operations: neg, ") + box + ", join, meet\n";
    out += "closure size: " + std::to_string(report.closure.size()) + '\n';
    out += "closure:";
    for (const Ranking& r : report.closure) out += ' ' + r.serialize();
    out += '\n';
    out += std::string("meet redundant: ") + (report.meet_redundant ? "yes" : "NO") + '\n';
    out += std::string("forbidden family ") + family + " (" + std::to_string(report.forbidden.size()) +
           " rankings):\n";
    for (const auto& [r, in] : report.forbidden) out += "  " + r.serialize() + (in ? " IN\n" : " OUT\n");
    out += "unreachable (" + std::to_string(report.unreachable.size()) + "):";
    for (const Ranking& r : report.unreachable) out += ' ' + r.serialize();
    out += '\n';
    out += std::string("verdict: ") +
           (report.disjoint ? std::string("DISJOINT, no member of ") + family + " is reachable"
                            : std::string("INTERSECTS, some member of ") + family + " is reachable") +
           '\n';
    return out;
}

}  // namespace tri
