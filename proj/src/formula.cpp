#include "tri/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "tri/parser.hpp"

namespace tri {

struct Formula::Node {
    Connective connective = Connective::Bot;
    std::size_t index = 0;
    Formula children[2];
    std::size_t size = 1;
    std::size_t depth = 1;
    std::size_t var_bound = 0;
};

bool is_unary(Connective c) noexcept {
    switch (c) {
        case Connective::Not:
        case Connective::Dia1:
        case Connective::Box1:
        case Connective::Dia2:
        case Connective::Box2: return true;
        default: return false;
    }
}

bool is_binary(Connective c) noexcept {
    return c == Connective::And || c == Connective::Or || c == Connective::Implies;
}

// Node holds Formula members, so a default Formula cannot itself allocate
// a node; a null pointer stands for bot.
Formula::Formula() = default;

Formula Formula::bot() { return Formula(); }

Formula Formula::var(std::size_t index) {
    auto node = std::make_shared<Node>();
    node->connective = Connective::Var;
    node->index = index;
    node->var_bound = index + 1;
    return Formula(std::move(node));
}

Connective Formula::connective() const noexcept {
    return node_ ? node_->connective : Connective::Bot;
}

std::size_t Formula::var_index() const {
    if (connective() != Connective::Var) throw std::logic_error("var_index on non-variable");
    return node_->index;
}

const Formula& Formula::operand() const {
    if (!is_unary(connective())) throw std::logic_error("operand on non-unary formula");
    return node_->children[0];
}

const Formula& Formula::lhs() const {
    if (!is_binary(connective())) throw std::logic_error("lhs on non-binary formula");
    return node_->children[0];
}

const Formula& Formula::rhs() const {
    if (!is_binary(connective())) throw std::logic_error("rhs on non-binary formula");
    return node_->children[1];
}

std::size_t Formula::size() const noexcept { return node_ ? node_->size : 1; }
std::size_t Formula::depth() const noexcept { return node_ ? node_->depth : 1; }
std::size_t Formula::var_bound() const noexcept { return node_ ? node_->var_bound : 0; }

Formula make_unary(Connective c, Formula operand) {
    if (!is_unary(c)) throw std::invalid_argument("make_unary: connective is not unary");
    auto node = std::make_shared<Formula::Node>();
    node->connective = c;
    node->size = operand.size() + 1;
    node->depth = operand.depth() + 1;
    node->var_bound = operand.var_bound();
    node->children[0] = std::move(operand);
    return Formula(std::move(node));
}

Formula make_binary(Connective c, Formula lhs, Formula rhs) {
    if (!is_binary(c)) throw std::invalid_argument("make_binary: connective is not binary");
    auto node = std::make_shared<Formula::Node>();
    node->connective = c;
    node->size = lhs.size() + rhs.size() + 1;
    node->depth = std::max(lhs.depth(), rhs.depth()) + 1;
    node->var_bound = std::max(lhs.var_bound(), rhs.var_bound());
    node->children[0] = std::move(lhs);
    node->children[1] = std::move(rhs);
    return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) noexcept {
    if (a.node_ == b.node_) return true;
    const Connective c = a.connective();
    if (c != b.connective() || a.size() != b.size()) return false;
    switch (c) {
        case Connective::Bot: return true;
        case Connective::Var: return a.node_->index == b.node_->index;
        default: break;
    }
    if (is_unary(c)) return a.node_->children[0] == b.node_->children[0];
    return a.node_->children[0] == b.node_->children[0] &&
           a.node_->children[1] == b.node_->children[1];
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << render(f); }

}  // namespace tri
