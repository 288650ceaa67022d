#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tri/formula.hpp"
#include "tri/interpretation.hpp"
#include "tri/truth_value.hpp"

namespace tri {

/// Values of one formula on every interpretation of 𝓘_n, canonical order.
using TruthColumn = std::vector<TruthValue>;

/// Direct recursive evaluation at one interpretation. Reference semantics;
/// everything column-wise is tested against it. Throws std::out_of_range if
/// the formula mentions a variable the interpretation does not assign.
TruthValue eval(const Formula& f, const Interpretation& w);

/// Evaluates formulas on all of 𝓘_n using the active kernel set.
///
/// Results are memoized per shared node for the evaluator's lifetime, so
/// formulas assembled from the same subformulas (the postulate checks) pay
/// for those subformulas once. The cache keeps its formulas alive, so node
/// identities cannot be reused while cached.
class Evaluator {
public:
    explicit Evaluator(std::size_t n);

    std::size_t variables() const noexcept { return n_; }
    std::size_t worlds() const noexcept { return worlds_; }

    /// Throws std::out_of_range if f mentions x_i with i >= n.
    const TruthColumn& operator()(const Formula& f);

    void clear() { cache_.clear(); }

private:
    struct Entry {
        Formula keep_alive;
        TruthColumn column;
    };

    const TruthColumn& column_of(const Formula& f);
    const TruthColumn& var_column(std::size_t index);

    std::size_t n_;
    std::size_t worlds_;
    TruthColumn bot_;
    std::vector<TruthColumn> vars_;
    std::unordered_map<const void*, Entry> cache_;
};

TruthColumn eval_all(const Formula& f, std::size_t n);

struct Classification {
    std::vector<Interpretation> models;
    std::vector<Interpretation> quasi_models;
    std::vector<Interpretation> countermodels;
};

Classification classify(const Formula& f, std::size_t n);

/// Same truth table on 𝓘_n.
bool equiv(const Formula& f, const Formula& g, std::size_t n);
/// Every model of f is a model of g.
bool entails(const Formula& f, const Formula& g, std::size_t n);
/// Same models (quasi-models and countermodels may differ).
bool bi_entails(const Formula& f, const Formula& g, std::size_t n);
/// Only countermodels.
bool is_contradiction(const Formula& f, std::size_t n);

// Column-level forms of the relations above.
bool columns_equal(std::span<const TruthValue> a, std::span<const TruthValue> b);
bool models_subset(std::span<const TruthValue> a, std::span<const TruthValue> b);
bool same_models(std::span<const TruthValue> a, std::span<const TruthValue> b);
std::size_t count_value(std::span<const TruthValue> column, TruthValue v);

/// One line per interpretation, canonical order: "d0 d1 ... dn-1 : v".
std::string truth_table(const Formula& f, std::size_t n);

}  // namespace tri
