#include "pwcanon/generator.hpp"

#include <utility>

namespace pwcanon {

OperatorRecipe random_recipe(const GeneratorConfig& cfg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> start(-4, 4);
  std::uniform_int_distribution<int> gap(1, 8);  // halved below: gaps in [1/2, 4]
  std::uniform_int_distribution<int> deg(cfg.min_degree, cfg.max_degree);
  std::uniform_int_distribution<int> coeff(-cfg.coeff_bound, cfg.coeff_bound);
  std::uniform_int_distribution<int> lead(1, cfg.coeff_bound);
  std::uniform_int_distribution<int> sign(0, 1);

  OperatorRecipe recipe;
  recipe.breakpoints.reserve(cfg.breakpoints);
  Rational b(start(rng));
  for (std::size_t i = 0; i < cfg.breakpoints; ++i) {
    recipe.breakpoints.push_back(b);
    b += Rational(gap(rng)) / 2;
  }

  recipe.pieces.reserve(2 * cfg.breakpoints + 1);
  for (std::size_t i = 0; i < 2 * cfg.breakpoints + 1; ++i) {
    int k = deg(rng);
    std::vector<Rational> row;
    row.reserve(k + 1);
    for (int j = 0; j < k; ++j) row.emplace_back(coeff(rng));
    row.emplace_back(sign(rng) ? lead(rng) : -lead(rng));
    recipe.pieces.push_back(std::move(row));
  }
  return recipe;
}

PieceFunction monomial_tree(const std::vector<Rational>& coeffs,
                            const std::vector<std::size_t>& order) {
  auto term = [&](std::size_t i) -> PieceFunction {
    const Rational& c = coeffs[i];
    if (i == 0) return constant(c);
    PieceFunction power = i == 1 ? variable() : pow(variable(), static_cast<unsigned>(i));
    if (c == 1) return power;
    return mul(constant(c), std::move(power));
  };

  PieceFunction sum;
  auto visit = [&](std::size_t i) {
    if (i >= coeffs.size() || coeffs[i] == 0) return;
    sum = sum ? add(std::move(sum), term(i)) : term(i);
  };
  if (order.empty()) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) visit(i);
  } else {
    for (std::size_t i : order) visit(i);
  }
  return sum ? sum : constant(Rational(0));
}

PiecewiseOperator materialize(const OperatorRecipe& recipe) {
  std::vector<PieceFunction> funcs;
  funcs.reserve(recipe.pieces.size());
  for (const auto& row : recipe.pieces) funcs.push_back(monomial_tree(row));
  return make(BreakpointSet(recipe.breakpoints), std::move(funcs));
}

PiecewiseOperator random_operator(const GeneratorConfig& cfg, std::mt19937_64& rng) {
  return materialize(random_recipe(cfg, rng));
}

}  // namespace pwcanon
