#pragma once

#include "qlat/words.hpp"

namespace qlat {

// Extended word grammar accepted on the command line: the plain generator
// terms of parse_word, plus parenthesized groups and commutator brackets,
// each with an optional integer power.
//
//   expr   := factor+
//   factor := atom ("^" signed-integer)?
//   atom   := "Tinf" | "T0" | "T1" | "(" expr ")" | "[" expr "," expr "]"
//
// "[a,b]" expands to a b a^-1 b^-1 before evaluation.
GenWord parse_word_expr(const std::string& text);

}  // namespace qlat
