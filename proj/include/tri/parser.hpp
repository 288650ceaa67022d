#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tri/formula.hpp"

namespace tri {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what);

    /// Byte offset into the input where the error was detected.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Grammar, loosest to tightest:
//   formula := or ( "->" formula )?          right associative
//   or      := and ( "|" and )*              left associative
//   and     := unary ( "&" unary )*          left associative
//   unary   := ("~" | "<>1" | "[]1" | "<>2" | "[]2") unary | atom
//   atom    := "bot" | "x" DIGITS | "(" formula ")"
Formula parse(std::string_view text);

/// Minimal parenthesization under the grammar above; parse(render(f)) == f.
std::string render(const Formula& f);

}  // namespace tri
