#include "antichain/poset_expr.hpp"

#include <cctype>

namespace antichain {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PosetExpr parse() {
    PosetExpr e = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  PosetExpr expr() {
    PosetExpr lhs = term();
    while (true) {
      PosetExpr::Kind kind;
      if (accept('+')) {
        kind = PosetExpr::Kind::OrdinalSum;
      } else if (accept('|')) {
        kind = PosetExpr::Kind::DisjointUnion;
      } else {
        return lhs;
      }
      PosetExpr node;
      node.kind = kind;
      node.children.push_back(std::move(lhs));
      node.children.push_back(term());
      lhs = std::move(node);
    }
  }

  PosetExpr term() {
    PosetExpr lhs = factor();
    while (accept('x') || accept('*')) {
      PosetExpr node;
      node.kind = PosetExpr::Kind::Product;
      node.children.push_back(std::move(lhs));
      node.children.push_back(factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  std::size_t number() {
    skip();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("parameter too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a positive integer", start);
    if (value == 0) throw ParseError("parameter must be at least 1", start);
    return value;
  }

  PosetExpr factor() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PosetExpr e = expr();
      expect(')');
      return e;
    }
    PosetExpr leaf;
    switch (c) {
      case 'C': leaf.kind = PosetExpr::Kind::Chain; break;
      case 'H': leaf.kind = PosetExpr::Kind::H; break;
      case 'K': leaf.kind = PosetExpr::Kind::K; break;
      case 'J': leaf.kind = PosetExpr::Kind::J; break;
      default: throw ParseError("expected C, H, K, J or '('", pos_);
    }
    ++pos_;
    expect('(');
    if (leaf.kind == PosetExpr::Kind::J) {
      leaf.children.push_back(expr());
    } else {
      leaf.n = number();
    }
    expect(')');
    return leaf;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PosetExpr parse_poset_expr(std::string_view text) { return Parser(text).parse(); }

std::string PosetExpr::to_string() const {
  switch (kind) {
    case Kind::Chain: return "C(" + std::to_string(n) + ")";
    case Kind::H: return "H(" + std::to_string(n) + ")";
    case Kind::K: return "K(" + std::to_string(n) + ")";
    case Kind::J: return "J(" + children[0].to_string() + ")";
    case Kind::Product: return "(" + children[0].to_string() + " x " + children[1].to_string() + ")";
    case Kind::OrdinalSum: return "(" + children[0].to_string() + " + " + children[1].to_string() + ")";
    case Kind::DisjointUnion: return "(" + children[0].to_string() + " | " + children[1].to_string() + ")";
  }
  return {};
}

Poset build(const PosetExpr& e, std::size_t max_ideals) {
  switch (e.kind) {
    case PosetExpr::Kind::Chain: return chain(e.n);
    case PosetExpr::Kind::H: return symmetric_square_quotient(e.n);
    case PosetExpr::Kind::K: return k_poset(e.n);
    case PosetExpr::Kind::J: return ideal_poset(build(e.children[0], max_ideals), max_ideals);
    case PosetExpr::Kind::Product:
      return product(build(e.children[0], max_ideals), build(e.children[1], max_ideals));
    case PosetExpr::Kind::OrdinalSum:
      return ordinal_sum(build(e.children[0], max_ideals), build(e.children[1], max_ideals));
    case PosetExpr::Kind::DisjointUnion:
      return disjoint_union(build(e.children[0], max_ideals), build(e.children[1], max_ideals));
  }
  throw InvalidArgument("unknown expression kind");
}

}  // namespace antichain
