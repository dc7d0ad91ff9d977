#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "antichain/errors.hpp"
#include "antichain/poset.hpp"

namespace antichain {

// Grammar:
//   expr   := term (('+' | '|') term)*      ordinal sum / disjoint union
//   term   := factor ('x' factor)*          product
//   factor := C(n) | H(n) | K(n) | J(expr) | '(' expr ')'
// All binary operators are left associative; n >= 1.
struct PosetExpr {
  enum class Kind { Chain, H, K, J, Product, OrdinalSum, DisjointUnion };

  Kind kind = Kind::Chain;
  std::size_t n = 1;                // leaf parameter
  std::vector<PosetExpr> children;  // one for J, two for binary operators

  std::string to_string() const;
};

// Throws ParseError with the offending byte offset.
PosetExpr parse_poset_expr(std::string_view text);

// Element numbering follows the constructors in poset.hpp.
Poset build(const PosetExpr& expr, std::size_t max_ideals = kDefaultMaxIdeals);

inline Poset build(std::string_view text, std::size_t max_ideals = kDefaultMaxIdeals) {
  return build(parse_poset_expr(text), max_ideals);
}

}  // namespace antichain
