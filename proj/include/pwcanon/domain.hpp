#pragma once

#include "pwcanon/errors.hpp"
#include "pwcanon/expr.hpp"

namespace pwcanon {

// The operations a set of piece functions must supply: a canonicalizer with
// C(C(f)) = C(f) whose structural equality decides extensional equivalence,
// point evaluation, and ring arithmetic on representatives.
class EffectiveDomain {
 public:
  virtual ~EffectiveDomain() = default;

  // Canonical representative. Every call is counted by perf.hpp; internal
  // helpers of an implementation must not route through this entry point.
  virtual PieceFunction canonicalize(const PieceFunction& f) const = 0;

  virtual Value eval_at(const PieceFunction& f, const Rational& b) const = 0;

  // The canonical representative of the constant function v.
  virtual PieceFunction constant(const Rational& v) const = 0;

  virtual bool equiv(const PieceFunction& f, const PieceFunction& g) const;
  virtual bool is_zero(const PieceFunction& f) const;
  PieceFunction zero() const { return constant(Rational(0)); }

  virtual PieceFunction add(const PieceFunction& f, const PieceFunction& g) const = 0;
  virtual PieceFunction sub(const PieceFunction& f, const PieceFunction& g) const = 0;
  virtual PieceFunction mul(const PieceFunction& f, const PieceFunction& g) const = 0;
  virtual PieceFunction neg(const PieceFunction& f) const = 0;
};

// Univariate polynomials over the rationals: dense coefficients, no trailing
// zeros. Canonical structural equality is a coefficient comparison, and this
// instance backs every canonicity guarantee in the library. Division nodes
// are rejected.
class PolynomialDomain final : public EffectiveDomain {
 public:
  PieceFunction canonicalize(const PieceFunction& f) const override;
  Value eval_at(const PieceFunction& f, const Rational& b) const override;
  PieceFunction constant(const Rational& v) const override;
  PieceFunction add(const PieceFunction& f, const PieceFunction& g) const override;
  PieceFunction sub(const PieceFunction& f, const PieceFunction& g) const override;
  PieceFunction mul(const PieceFunction& f, const PieceFunction& g) const override;
  PieceFunction neg(const PieceFunction& f) const override;
};

// Formal rational expressions reduced to a coprime numerator/denominator pair
// with a monic denominator. equiv identifies functions that agree off a finite
// set (removable singularities are cancelled), and eval_at reports Undefined
// exactly where the reduced denominator vanishes.
class RationalFunctionDomain final : public EffectiveDomain {
 public:
  PieceFunction canonicalize(const PieceFunction& f) const override;
  Value eval_at(const PieceFunction& f, const Rational& b) const override;
  PieceFunction constant(const Rational& v) const override;
  PieceFunction add(const PieceFunction& f, const PieceFunction& g) const override;
  PieceFunction sub(const PieceFunction& f, const PieceFunction& g) const override;
  PieceFunction mul(const PieceFunction& f, const PieceFunction& g) const override;
  PieceFunction neg(const PieceFunction& f) const override;
};

const PolynomialDomain& default_domain();

}  // namespace pwcanon
