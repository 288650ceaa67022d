#include "tri/semantics.hpp"

#include <algorithm>
#include <stdexcept>

#include "tri/kernels.hpp"

namespace tri {

namespace {

const std::uint8_t* bytes(std::span<const TruthValue> s) {
    return reinterpret_cast<const std::uint8_t*>(s.data());
}
std::uint8_t* bytes(TruthColumn& s) { return reinterpret_cast<std::uint8_t*>(s.data()); }

template <class F>
kernels::Lut unary_lut(F fn) {
    kernels::Lut lut{};
    for (TruthValue v : kTruthValues) lut[code(v)] = code(fn(v));
    return lut;
}

template <class F>
kernels::Lut binary_lut(F fn) {
    kernels::Lut lut{};
    for (TruthValue a : kTruthValues)
        for (TruthValue b : kTruthValues) lut[3 * code(a) + code(b)] = code(fn(a, b));
    return lut;
}

const kernels::Lut& lut_for(Connective c) {
    static const kernels::Lut not_lut = unary_lut(negate);
    static const kernels::Lut dia1_lut = unary_lut(diamond1);
    static const kernels::Lut box1_lut = unary_lut(static_cast<TruthValue (*)(TruthValue) noexcept>(box1));
    static const kernels::Lut dia2_lut = unary_lut(diamond2);
    static const kernels::Lut box2_lut = unary_lut(static_cast<TruthValue (*)(TruthValue) noexcept>(box2));
    static const kernels::Lut implies_lut =
        binary_lut([](TruthValue a, TruthValue b) { return implies(a, b); });
    switch (c) {
        case Connective::Not: return not_lut;
        case Connective::Dia1: return dia1_lut;
        case Connective::Box1: return box1_lut;
        case Connective::Dia2: return dia2_lut;
        case Connective::Box2: return box2_lut;
        case Connective::Implies: return implies_lut;
        default: throw std::logic_error("no lookup table for connective");
    }
}

void check_bound(const Formula& f, std::size_t n) {
    if (f.var_bound() > n)
        throw std::out_of_range("formula mentions x" + std::to_string(f.var_bound() - 1) +
                                " but only " + std::to_string(n) + " variable(s) are in scope");
}

}  // namespace

TruthValue eval(const Formula& f, const Interpretation& w) {
    switch (f.connective()) {
        case Connective::Bot: return TruthValue::Zero;
        case Connective::Var:
            if (f.var_index() >= w.size())
                throw std::out_of_range("variable x" + std::to_string(f.var_index()) +
                                        " not assigned by interpretation of size " +
                                        std::to_string(w.size()));
            return w[f.var_index()];
        case Connective::Not: return negate(eval(f.operand(), w));
        case Connective::Dia1: return diamond1(eval(f.operand(), w));
        case Connective::Box1: return box1(eval(f.operand(), w));
        case Connective::Dia2: return diamond2(eval(f.operand(), w));
        case Connective::Box2: return box2(eval(f.operand(), w));
        case Connective::And: return meet(eval(f.lhs(), w), eval(f.rhs(), w));
        case Connective::Or: return join(eval(f.lhs(), w), eval(f.rhs(), w));
        case Connective::Implies: return implies(eval(f.lhs(), w), eval(f.rhs(), w));
    }
    throw std::logic_error("unknown connective");
}

Evaluator::Evaluator(std::size_t n) : n_(n), worlds_(world_count(n)), bot_(worlds_, TruthValue::Zero) {
    vars_.resize(n);
}

const TruthColumn& Evaluator::var_column(std::size_t index) {
    TruthColumn& col = vars_[index];
    if (col.empty()) {
        col.resize(worlds_);
        std::size_t stride = 1;
        for (std::size_t i = index + 1; i < n_; ++i) stride *= 3;
        for (std::size_t w = 0; w < worlds_; ++w)
            col[w] = from_code(static_cast<std::uint8_t>((w / stride) % 3));
    }
    return col;
}

const TruthColumn& Evaluator::operator()(const Formula& f) {
    check_bound(f, n_);
    return column_of(f);
}

const TruthColumn& Evaluator::column_of(const Formula& f) {
    const Connective c = f.connective();
    if (c == Connective::Bot) return bot_;
    if (c == Connective::Var) return var_column(f.var_index());
    if (auto it = cache_.find(f.node_id()); it != cache_.end()) return it->second.column;

    const kernels::KernelSet& k = kernels::active();
    TruthColumn out(worlds_);
    if (is_unary(c)) {
        const TruthColumn& in = column_of(f.operand());
        k.map_unary(lut_for(c), bytes(in), bytes(out), worlds_);
    } else {
        // References into cache_ stay valid across rehashing.
        const TruthColumn& a = column_of(f.lhs());
        const TruthColumn& b = column_of(f.rhs());
        switch (c) {
            case Connective::And: k.min(bytes(a), bytes(b), bytes(out), worlds_); break;
            case Connective::Or: k.max(bytes(a), bytes(b), bytes(out), worlds_); break;
            default: k.map_binary(lut_for(c), bytes(a), bytes(b), bytes(out), worlds_); break;
        }
    }
    auto [it, inserted] = cache_.emplace(f.node_id(), Entry{f, std::move(out)});
    return it->second.column;
}

TruthColumn eval_all(const Formula& f, std::size_t n) {
    Evaluator ev(n);
    return ev(f);
}

Classification classify(const Formula& f, std::size_t n) {
    const TruthColumn col = eval_all(f, n);
    Classification out;
    for (std::size_t w = 0; w < col.size(); ++w) {
        Interpretation world = Interpretation::from_index(w, n);
        switch (col[w]) {
            case TruthValue::One: out.models.push_back(std::move(world)); break;
            case TruthValue::Half: out.quasi_models.push_back(std::move(world)); break;
            case TruthValue::Zero: out.countermodels.push_back(std::move(world)); break;
        }
    }
    return out;
}

bool columns_equal(std::span<const TruthValue> a, std::span<const TruthValue> b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

bool models_subset(std::span<const TruthValue> a, std::span<const TruthValue> b) {
    if (a.size() != b.size()) throw std::invalid_argument("columns over different 𝓘_n");
    return kernels::active().find_unmatched(bytes(a), bytes(b), code(TruthValue::One), a.size()) ==
           a.size();
}

bool same_models(std::span<const TruthValue> a, std::span<const TruthValue> b) {
    return models_subset(a, b) && models_subset(b, a);
}

std::size_t count_value(std::span<const TruthValue> column, TruthValue v) {
    return kernels::active().count_equal(bytes(column), code(v), column.size());
}

bool equiv(const Formula& f, const Formula& g, std::size_t n) {
    Evaluator ev(n);
    const TruthColumn& a = ev(f);
    return columns_equal(a, ev(g));
}

bool entails(const Formula& f, const Formula& g, std::size_t n) {
    Evaluator ev(n);
    const TruthColumn& a = ev(f);
    return models_subset(a, ev(g));
}

bool bi_entails(const Formula& f, const Formula& g, std::size_t n) {
    Evaluator ev(n);
    const TruthColumn& a = ev(f);
    return same_models(a, ev(g));
}

bool is_contradiction(const Formula& f, std::size_t n) {
    const TruthColumn col = eval_all(f, n);
    return count_value(col, TruthValue::Zero) == col.size();
}

std::string truth_table(const Formula& f, std::size_t n) {
    const TruthColumn col = eval_all(f, n);
    std::string out;
    for (std::size_t w = 0; w < col.size(); ++w) {
        out += Interpretation::from_index(w, n).to_string(' ');
        out += n ? " : " : ": ";
        out += to_char(col[w]);
        out += '\n';
    }
    return out;
}

}  // namespace tri
