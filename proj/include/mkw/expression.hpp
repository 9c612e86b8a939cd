#pragma once

#include <string>
#include <string_view>

#include "mkw/bck.hpp"
#include "mkw/lincomb.hpp"
#include "mkw/regstruct.hpp"

namespace mkw {

// Text expressions over forests, in the same notation the library prints.
//
//   sum     := term (('+' | '-') term)*
//   term    := ['-'] [rational '*'] tensor
//   tensor  := product (('⊗' | '(x)') product)*
//   product := atom (op atom)*          left-associative, one precedence level
//   atom    := forest | '1' | rational | '(' sum ')'
//
// Planar operators: '⧢'/"sh" shuffle, '⊲'/"|>" left grafting, '∗'/"**" Grossman–Larson,
// '·'/'.' concatenation, '⊤'/"^" natural growth. Non-planar forests only multiply with '·'.
// Regularity trees use '⊙'/"@" for the enveloping product, "**" for ∗ and "|>" for
// the extended deformed grafting.

// A planar value of any tensor arity; plain combinations have arity 1.
MultiTensor parse_expression(std::string_view text, const Alphabet& alphabet);
LinComb parse_lincomb(std::string_view text, const Alphabet& alphabet);      // requires arity ≤ 1
TensorElem parse_tensor(std::string_view text, const Alphabet& alphabet);    // requires arity ≤ 2

BckLinComb parse_bck_lincomb(std::string_view text, const Alphabet& alphabet);
BckTensor parse_bck_tensor(std::string_view text, const Alphabet& alphabet);

RegLinComb parse_reg_lincomb(std::string_view text, std::size_t dimension);
RegTensor parse_reg_tensor(std::string_view text, std::size_t dimension);

// Alphabet of every token named in the texts, or {o} when they name none.
Alphabet infer_alphabet(const std::vector<std::string>& texts);

}  // namespace mkw
