#include "pwcanon/printer.hpp"

#include "json.hpp"
#include "pwcanon/expr.hpp"

namespace pwcanon {

namespace {

// Grammar levels, loosest to tightest: 0 additive, 1 multiplicative, 2 unary
// minus / power, 3 atom. A node is parenthesized when its own level is looser
// than its context requires.
struct Rendered {
  std::string text;
  int level = 0;
};

std::string at_level(const PieceFunction& f, int required);

Rendered render_poly(const Polynomial& p) {
  if (p.is_zero()) return {"0", 3};

  std::string out;
  int terms = 0;
  int last_deg = 0;
  Rational last_mag;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coefficient(static_cast<std::size_t>(k));
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational m = negative ? Rational(-c) : c;
    std::string part;
    if (k == 0) {
      part = to_string(m);
    } else {
      std::string xpart = k == 1 ? "x" : "x^" + std::to_string(k);
      part = m == 1 ? std::move(xpart) : to_string(m) + "*" + xpart;
    }
    if (terms == 0)
      out = negative ? "-" + part : part;
    else
      out += (negative ? " - " : " + ") + part;
    ++terms;
    last_deg = k;
    last_mag = m;
  }

  if (terms > 1) return {std::move(out), 0};
  const bool negative = out.front() == '-';
  if (last_deg == 0) return {std::move(out), negative ? 2 : 3};
  if (last_mag != 1) return {std::move(out), 1};
  return {std::move(out), last_deg == 1 && !negative ? 3 : 2};
}

Rendered render(const PieceFunction& f) {
  switch (f->kind) {
    case Expr::Kind::Constant:
      return {to_string(f->value), f->value < 0 ? 2 : 3};
    case Expr::Kind::Var:
      return {"x", 3};
    case Expr::Kind::Add:
      return {at_level(f->lhs, 0) + " + " + at_level(f->rhs, 1), 0};
    case Expr::Kind::Sub:
      return {at_level(f->lhs, 0) + " - " + at_level(f->rhs, 1), 0};
    case Expr::Kind::Mul:
      return {at_level(f->lhs, 1) + "*" + at_level(f->rhs, 2), 1};
    case Expr::Kind::Div:
      // Division lies outside the surface grammar; rendered for diagnostics.
      return {"(" + at_level(f->lhs, 0) + ")/(" + at_level(f->rhs, 0) + ")", 2};
    case Expr::Kind::Neg:
      return {"-" + at_level(f->lhs, 2), 2};
    case Expr::Kind::Pow:
      return {at_level(f->lhs, 3) + "^" + std::to_string(f->exponent), 2};
    case Expr::Kind::Poly:
      return render_poly(f->poly);
    case Expr::Kind::RatFun:
      if (f->den == Polynomial::constant(Rational(1))) return render_poly(f->num);
      return {"(" + render_poly(f->num).text + ")/(" + render_poly(f->den).text + ")", 2};
  }
  return {"0", 3};
}

std::string at_level(const PieceFunction& f, int required) {
  Rendered r = render(f);
  if (r.level < required) return "(" + r.text + ")";
  return std::move(r.text);
}

}  // namespace

std::string print(const PieceFunction& f) { return at_level(f, 0); }

std::string print(const Value& v) { return v.is_defined() ? to_string(v.get()) : "undef"; }

std::string print(const PiecewiseOperator& p, const EffectiveDomain& dom) {
  if (p.breakpoint_count() == 0) return print(p.end_piece().fn);

  std::string out = "pw { ";
  for (const CondPair& c : p.pairs()) {
    const std::string b = to_string(c.right_pt);
    out += "x < " + b + " : " + print(c.left_fn) + " ; ";
    out += "x = " + b + " : " + print(dom.eval_at(c.pt_fn, c.right_pt)) + " ; ";
  }
  out += "otherwise : " + print(p.end_piece().fn) + " }";
  return out;
}

std::string json_form(const PiecewiseOperator& p) {
  nlohmann::json breakpoints = nlohmann::json::array();
  for (const CondPair& c : p.pairs()) breakpoints.push_back(to_string(c.right_pt));
  nlohmann::json pieces = nlohmann::json::array();
  for (std::size_t i = 0; i < p.piece_count(); ++i) pieces.push_back(print(p.piece(i)));
  return nlohmann::json{{"breakpoints", breakpoints}, {"pieces", pieces}}.dump();
}

}  // namespace pwcanon
