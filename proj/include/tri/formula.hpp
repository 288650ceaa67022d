#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

namespace tri {

enum class Connective : std::uint8_t {
    Bot,
    Var,
    Not,
    And,
    Or,
    Implies,
    Dia1,
    Box1,
    Dia2,
    Box2,
};

bool is_unary(Connective c) noexcept;
bool is_binary(Connective c) noexcept;

/// Immutable formula of K3 strong logic extended with <>1/[]1 and <>2/[]2.
///
/// Formulas are shared, reference-counted trees: copying is cheap and
/// subformulas built once (for instance the arguments of a revision) are
/// referenced, not duplicated, by every formula that contains them. The
/// variable count is not part of a formula; see `max_var_index`.
class Formula {
public:
    /// The constant that evaluates to 0 everywhere.
    Formula();

    static Formula bot();
    static Formula var(std::size_t index);

    Connective connective() const noexcept;
    std::size_t var_index() const;  ///< only for Var
    const Formula& operand() const;  ///< only for unary connectives
    const Formula& lhs() const;      ///< only for binary connectives
    const Formula& rhs() const;      ///< only for binary connectives

    /// Identity of the shared node; used by evaluators to memoize shared
    /// subtrees.
    const void* node_id() const noexcept { return node_.get(); }

    /// Number of nodes in the tree (shared subtrees counted each time).
    std::size_t size() const noexcept;
    std::size_t depth() const noexcept;

    /// Largest variable index + 1, or 0 when the formula has no variables.
    std::size_t var_bound() const noexcept;

    friend bool operator==(const Formula& a, const Formula& b) noexcept;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    friend Formula make_unary(Connective, Formula);
    friend Formula make_binary(Connective, Formula, Formula);

    std::shared_ptr<const Node> node_;
};

Formula make_unary(Connective c, Formula operand);
Formula make_binary(Connective c, Formula lhs, Formula rhs);

inline Formula operator~(Formula f) { return make_unary(Connective::Not, std::move(f)); }
inline Formula operator&(Formula a, Formula b) {
    return make_binary(Connective::And, std::move(a), std::move(b));
}
inline Formula operator|(Formula a, Formula b) {
    return make_binary(Connective::Or, std::move(a), std::move(b));
}
inline Formula implies(Formula a, Formula b) {
    return make_binary(Connective::Implies, std::move(a), std::move(b));
}
inline Formula dia1(Formula f) { return make_unary(Connective::Dia1, std::move(f)); }
inline Formula box1(Formula f) { return make_unary(Connective::Box1, std::move(f)); }
inline Formula dia2(Formula f) { return make_unary(Connective::Dia2, std::move(f)); }
inline Formula box2(Formula f) { return make_unary(Connective::Box2, std::move(f)); }

/// []1 f & []1 ~f: takes the value 1 exactly where f takes 1/2.
inline Formula undetermined(const Formula& f) { return box1(f) & box1(~f); }

std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace tri
