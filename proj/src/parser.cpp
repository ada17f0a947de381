#include "pwcanon/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwcanon/errors.hpp"
#include "pwcanon/expr.hpp"

namespace pwcanon {

namespace {

enum class Tok {
  Number, Ident, Plus, Minus, Star, Caret,
  LParen, RParen, LBrace, RBrace, Semi, Colon,
  Less, LessEq, Eq, End,
};

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  Rational value;    // Number
  std::string text;  // Ident
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&] {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return std::string(s.substr(start, i - start));
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num(digits());
      Int den(1);
      if (i + 1 < s.size() && s[i] == '/' &&
          std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        den = Int(digits());
        if (den == 0) throw SyntaxError("zero denominator in rational literal", pos);
      }
      out.push_back({Tok::Number, pos, Rational(num) / Rational(den), {}});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, pos, {}, std::string(s.substr(start, i - start))});
      continue;
    }
    ++i;
    switch (c) {
      case '+': out.push_back({Tok::Plus, pos, {}, {}}); break;
      case '-': out.push_back({Tok::Minus, pos, {}, {}}); break;
      case '*': out.push_back({Tok::Star, pos, {}, {}}); break;
      case '^': out.push_back({Tok::Caret, pos, {}, {}}); break;
      case '(': out.push_back({Tok::LParen, pos, {}, {}}); break;
      case ')': out.push_back({Tok::RParen, pos, {}, {}}); break;
      case '{': out.push_back({Tok::LBrace, pos, {}, {}}); break;
      case '}': out.push_back({Tok::RBrace, pos, {}, {}}); break;
      case ';': out.push_back({Tok::Semi, pos, {}, {}}); break;
      case ':': out.push_back({Tok::Colon, pos, {}, {}}); break;
      case '=': out.push_back({Tok::Eq, pos, {}, {}}); break;
      case '<':
        if (i < s.size() && s[i] == '=') {
          ++i;
          out.push_back({Tok::LessEq, pos, {}, {}});
        } else {
          out.push_back({Tok::Less, pos, {}, {}});
        }
        break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  out.push_back({Tok::End, s.size(), {}, {}});
  return out;
}

// Arithmetic between plain (non-piecewise) expressions stays at the piece
// level, so text without 'pw' parses to a single leaf.
PwExprPtr pe_add(PwExprPtr a, PwExprPtr b) {
  if (a->kind == PwExpr::Kind::Leaf && b->kind == PwExpr::Kind::Leaf)
    return pw_leaf(add(a->fn, b->fn));
  return add(std::move(a), std::move(b));
}

PwExprPtr pe_sub(PwExprPtr a, PwExprPtr b) {
  if (a->kind == PwExpr::Kind::Leaf && b->kind == PwExpr::Kind::Leaf)
    return pw_leaf(sub(a->fn, b->fn));
  return sub(std::move(a), std::move(b));
}

PwExprPtr pe_mul(PwExprPtr a, PwExprPtr b) {
  if (a->kind == PwExpr::Kind::Leaf && b->kind == PwExpr::Kind::Leaf)
    return pw_leaf(mul(a->fn, b->fn));
  return mul(std::move(a), std::move(b));
}

PwExprPtr pe_neg(PwExprPtr a) {
  if (a->kind == PwExpr::Kind::Leaf) return pw_leaf(neg(a->fn));
  return neg(std::move(a));
}

// A power of a case block expands to repeated multiplication.
PwExprPtr pe_pow(PwExprPtr a, unsigned n) {
  if (a->kind == PwExpr::Kind::Leaf) return pw_leaf(pow(a->fn, n));
  if (n == 0) return pw_leaf(constant(Rational(1)));
  PwExprPtr r = a;
  for (unsigned k = 1; k < n; ++k) r = mul(r, a);
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  PwExprPtr run() {
    PwExprPtr e = expr();
    expect(Tok::End, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++i_;
    return true;
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) throw SyntaxError(std::string("expected ") + what, peek().pos);
    return take();
  }

  bool at_keyword(const char* kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  PwExprPtr expr() {
    PwExprPtr e = term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool plus = take().kind == Tok::Plus;
      PwExprPtr rhs = term();
      e = plus ? pe_add(std::move(e), std::move(rhs)) : pe_sub(std::move(e), std::move(rhs));
    }
    return e;
  }

  PwExprPtr term() {
    PwExprPtr e = factor();
    while (accept(Tok::Star)) e = pe_mul(std::move(e), factor());
    return e;
  }

  PwExprPtr factor() {
    if (accept(Tok::Minus)) return pe_neg(factor());
    PwExprPtr a = atom();
    if (accept(Tok::Caret)) return pe_pow(std::move(a), exponent());
    return a;
  }

  unsigned exponent() {
    Token t = expect(Tok::Number, "a natural-number exponent");
    if (denominator(t.value) != 1 || t.value < 0)
      throw SyntaxError("expected a natural-number exponent", t.pos);
    if (t.value > std::numeric_limits<unsigned>::max())
      throw SyntaxError("exponent too large", t.pos);
    return numerator(t.value).convert_to<unsigned>();
  }

  PwExprPtr atom() {
    if (at(Tok::Number)) return pw_leaf(constant(take().value));
    if (at_keyword("x")) {
      take();
      return pw_leaf(variable());
    }
    if (at_keyword("pw")) {
      take();
      return cases();
    }
    if (accept(Tok::LParen)) {
      PwExprPtr e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    throw SyntaxError("expected a rational, 'x', '(' or 'pw'", peek().pos);
  }

  Rational signed_rational() {
    bool negate = accept(Tok::Minus);
    Token t = expect(Tok::Number, "a rational breakpoint");
    return negate ? Rational(-t.value) : t.value;
  }

  // One breakpoint's worth of condition slots, filled in order of appearance.
  struct Entry {
    Rational bp;
    PwExprPtr region;  // piece on the open region ending at bp
    PwExprPtr point;   // piece at bp itself
  };

  void place(std::vector<Entry>& entries, const Rational& bp, Tok op, PwExprPtr piece,
             std::size_t pos) {
    if (entries.empty() || entries.back().bp < bp) {
      Entry e;
      e.bp = bp;
      if (op == Tok::Less || op == Tok::LessEq) e.region = piece;
      if (op == Tok::Eq || op == Tok::LessEq) e.point = std::move(piece);
      entries.push_back(std::move(e));
      return;
    }
    Entry& last = entries.back();
    if (bp < last.bp)
      throw NonMonotoneConditions("branch breakpoints must be strictly increasing (at offset " +
                                  std::to_string(pos) + ")");
    // Same breakpoint again: only 'x = b' directly after 'x < b' is a new
    // slot; a repeated slot is a duplicate and a region after a point would
    // reorder the conditions.
    if (op == Tok::Eq) {
      if (last.point) throw DuplicateCondition("condition 'x = " + to_string(bp) +
                                               "' given twice (at offset " + std::to_string(pos) +
                                               ")");
      last.point = std::move(piece);
      return;
    }
    if (last.region)
      throw DuplicateCondition("region condition at breakpoint " + to_string(bp) +
                               " given twice (at offset " + std::to_string(pos) + ")");
    throw NonMonotoneConditions("region condition follows the point condition at breakpoint " +
                                to_string(bp) + " (at offset " + std::to_string(pos) + ")");
  }

  PwExprPtr cases() {
    expect(Tok::LBrace, "'{'");
    std::vector<Entry> entries;
    PwExprPtr end;
    while (true) {
      if (at_keyword("otherwise")) {
        if (entries.empty())
          throw SyntaxError("expected at least one branch before 'otherwise'", peek().pos);
        take();
        expect(Tok::Colon, "':'");
        end = expr();
        break;
      }
      std::size_t pos = peek().pos;
      if (!at_keyword("x")) throw SyntaxError("expected a branch 'x < b', 'x = b' or 'x <= b'", pos);
      take();
      Tok op;
      if (accept(Tok::Less)) op = Tok::Less;
      else if (accept(Tok::LessEq)) op = Tok::LessEq;
      else if (accept(Tok::Eq)) op = Tok::Eq;
      else throw SyntaxError("expected '<', '=' or '<=' after 'x'", peek().pos);
      Rational bp = signed_rational();
      expect(Tok::Colon, "':'");
      PwExprPtr piece = expr();
      place(entries, bp, op, std::move(piece), pos);
      expect(Tok::Semi, "';'");
    }
    expect(Tok::RBrace, "'}'");

    // Resolve the fall-through defaults right to left: a missing region takes
    // the next region (finally 'otherwise'), then a missing point takes the
    // region on its left.
    std::vector<Breakpoint> bps;
    std::vector<PwExprPtr> branches(2 * entries.size() + 1);
    branches.back() = end;
    PwExprPtr next_region = end;
    for (std::size_t i = entries.size(); i-- > 0;) {
      PwExprPtr region = entries[i].region ? entries[i].region : next_region;
      branches[2 * i] = region;
      branches[2 * i + 1] = entries[i].point ? entries[i].point : region;
      next_region = region;
    }
    bps.reserve(entries.size());
    for (const Entry& e : entries) bps.push_back(e.bp);
    return pw_cases(std::move(bps), std::move(branches));
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

PwExprPtr parse(std::string_view text) { return Parser(text).run(); }

Rational parse_rational(std::string_view text) {
  std::vector<Token> toks = lex(text);
  std::size_t i = 0;
  bool negate = false;
  if (toks[i].kind == Tok::Minus) {
    negate = true;
    ++i;
  }
  if (toks[i].kind != Tok::Number)
    throw SyntaxError("expected a rational number", toks[i].pos);
  Rational v = toks[i].value;
  ++i;
  if (toks[i].kind != Tok::End)
    throw SyntaxError("trailing input after rational number", toks[i].pos);
  return negate ? Rational(-v) : v;
}

}  // namespace pwcanon
