#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "pwcanon/piecewise.hpp"

namespace pwcanon {

struct GeneratorConfig {
  std::size_t breakpoints = 0;
  int min_degree = 0;
  int max_degree = 3;
  int coeff_bound = 9;  // leading coefficients are nonzero within the bound
};

// Coefficient-level description of a random operator: strictly increasing
// breakpoints (integer or half-integer gaps) and one dense low-first
// coefficient row per piece, 2n+1 rows in display order. Kept separate from
// the built operator so callers can rebuild the same function with a
// different tree shape or perturb a single row.
struct OperatorRecipe {
  std::vector<Breakpoint> breakpoints;
  std::vector<std::vector<Rational>> pieces;
};

OperatorRecipe random_recipe(const GeneratorConfig& cfg, std::mt19937_64& rng);

// Raw monomial-sum tree (not a canonical leaf) for one coefficient row, terms
// added left-associatively in the given visit order over the row's indices;
// an empty order means increasing degree. Zero rows collapse to the constant
// zero.
PieceFunction monomial_tree(const std::vector<Rational>& coeffs,
                            const std::vector<std::size_t>& order = {});

PiecewiseOperator materialize(const OperatorRecipe& recipe);

PiecewiseOperator random_operator(const GeneratorConfig& cfg, std::mt19937_64& rng);

}  // namespace pwcanon
