#include "tri/parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace tri {

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

enum class Tok { End, Bot, Var, Not, And, Or, Arrow, Dia1, Box1, Dia2, Box2, LParen, RParen };

struct Token {
    Tok kind = Tok::End;
    std::size_t pos = 0;
    std::size_t index = 0;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::Bot: return "'bot'";
        case Tok::Var: return "variable x" + std::to_string(t.index);
        case Tok::Not: return "'~'";
        case Tok::And: return "'&'";
        case Tok::Or: return "'|'";
        case Tok::Arrow: return "'->'";
        case Tok::Dia1: return "'<>1'";
        case Tok::Box1: return "'[]1'";
        case Tok::Dia2: return "'<>2'";
        case Tok::Box2: return "'[]2'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
    }
    return "token";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Token t;
        t.pos = pos_;
        if (pos_ >= text_.size()) return t;
        const std::string_view rest = text_.substr(pos_);
        auto take = [&](Tok kind, std::size_t len) {
            t.kind = kind;
            pos_ += len;
            return t;
        };
        switch (rest[0]) {
            case '~': return take(Tok::Not, 1);
            case '&': return take(Tok::And, 1);
            case '|': return take(Tok::Or, 1);
            case '(': return take(Tok::LParen, 1);
            case ')': return take(Tok::RParen, 1);
            default: break;
        }
        if (rest.starts_with("->")) return take(Tok::Arrow, 2);
        if (rest.starts_with("<>1")) return take(Tok::Dia1, 3);
        if (rest.starts_with("[]1")) return take(Tok::Box1, 3);
        if (rest.starts_with("<>2")) return take(Tok::Dia2, 3);
        if (rest.starts_with("[]2")) return take(Tok::Box2, 3);
        if (rest.starts_with("<>") || rest.starts_with("[]"))
            throw ParseError(pos_, "modality must be followed by 1 or 2");

        if (std::isalpha(static_cast<unsigned char>(rest[0]))) {
            std::size_t len = 0;
            while (len < rest.size() && std::isalnum(static_cast<unsigned char>(rest[len]))) ++len;
            const std::string_view word = rest.substr(0, len);
            if (word == "bot") return take(Tok::Bot, len);
            if (word[0] != 'x') throw ParseError(pos_, "unknown identifier '" + std::string(word) + "'");
            const std::string_view digits = word.substr(1);
            if (digits.empty())
                throw ParseError(pos_, "variable index missing after 'x'");
            std::size_t value = 0;
            const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (ec == std::errc::result_out_of_range)
                throw ParseError(pos_, "variable index out of range in '" + std::string(word) + "'");
            if (ec != std::errc() || end != digits.data() + digits.size())
                throw ParseError(pos_, "variable index is not a decimal integer in '" +
                                           std::string(word) + "'");
            t.index = value;
            return take(Tok::Var, len);
        }
        throw ParseError(pos_, std::string("unexpected character '") + rest[0] + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Formula parse_all() {
        Formula f = parse_implies();
        if (cur_.kind != Tok::End) fail("expected end of input");
        return f;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(cur_.pos, expected + ", found " + describe(cur_));
    }

    Formula parse_implies() {
        Formula lhs = parse_or();
        if (cur_.kind != Tok::Arrow) return lhs;
        advance();
        return implies(std::move(lhs), parse_implies());
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (cur_.kind == Tok::Or) {
            advance();
            f = std::move(f) | parse_and();
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (cur_.kind == Tok::And) {
            advance();
            f = std::move(f) & parse_unary();
        }
        return f;
    }

    Formula parse_unary() {
        Connective c;
        switch (cur_.kind) {
            case Tok::Not: c = Connective::Not; break;
            case Tok::Dia1: c = Connective::Dia1; break;
            case Tok::Box1: c = Connective::Box1; break;
            case Tok::Dia2: c = Connective::Dia2; break;
            case Tok::Box2: c = Connective::Box2; break;
            default: return parse_atom();
        }
        advance();
        return make_unary(c, parse_unary());
    }

    Formula parse_atom() {
        switch (cur_.kind) {
            case Tok::Bot: advance(); return Formula::bot();
            case Tok::Var: {
                const std::size_t index = cur_.index;
                advance();
                return Formula::var(index);
            }
            case Tok::LParen: {
                advance();
                Formula inner = parse_implies();
                if (cur_.kind != Tok::RParen) fail("expected ')'");
                advance();
                return inner;
            }
            default: fail("expected formula");
        }
    }

    Lexer lexer_;
    Token cur_;
};

// Binding strength used by the renderer; higher binds tighter.
int precedence(Connective c) {
    switch (c) {
        case Connective::Implies: return 1;
        case Connective::Or: return 2;
        case Connective::And: return 3;
        default: return 4;
    }
}

const char* symbol(Connective c) {
    switch (c) {
        case Connective::Not: return "~";
        case Connective::Dia1: return "<>1 ";
        case Connective::Box1: return "[]1 ";
        case Connective::Dia2: return "<>2 ";
        case Connective::Box2: return "[]2 ";
        case Connective::And: return " & ";
        case Connective::Or: return " | ";
        case Connective::Implies: return " -> ";
        default: return "";
    }
}

void render_into(const Formula& f, int min_prec, std::string& out) {
    const Connective c = f.connective();
    const int prec = precedence(c);
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (c) {
        case Connective::Bot: out += "bot"; break;
        case Connective::Var:
            out += 'x';
            out += std::to_string(f.var_index());
            break;
        case Connective::Implies:
            render_into(f.lhs(), prec + 1, out);
            out += symbol(c);
            render_into(f.rhs(), prec, out);
            break;
        case Connective::And:
        case Connective::Or:
            render_into(f.lhs(), prec, out);
            out += symbol(c);
            render_into(f.rhs(), prec + 1, out);
            break;
        default:
            out += symbol(c);
            render_into(f.operand(), prec, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Formula& f) {
    std::string out;
    render_into(f, 0, out);
    return out;
}

}  // namespace tri
