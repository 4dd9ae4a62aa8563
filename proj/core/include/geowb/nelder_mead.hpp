#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace geowb {

struct NelderMeadResult {
  std::vector<double> point;    // best vertex found
  double value = 0.0;           // objective at point (maximization)
  std::size_t evaluations = 0;  // objective calls consumed
  std::size_t iterations = 0;   // reflect/expand/contract/shrink rounds
  bool converged = false;       // tolerances met before the budget ran out
};

// Deterministic Nelder-Mead ascent (maximization) from an explicit simplex
// of n+1 points in R^n. Standard coefficients: reflect 1, expand 2,
// contract 1/2, shrink 1/2; ties broken by stable vertex order. Stops when
// the value spread and the vertex spread both fall below the tolerances
// (converged) or when max_evaluations is exhausted. The objective should
// return -infinity for invalid points; NaN is treated as -infinity.
// Throws std::invalid_argument for a malformed simplex, negative
// tolerances, or a budget smaller than the initial simplex.
NelderMeadResult nelder_mead_maximize(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<std::vector<double>> simplex, std::size_t max_evaluations,
    double value_tol, double point_tol);

// Axis-aligned simplex: start plus one vertex per coordinate, offset by the
// matching step. Throws std::invalid_argument on a size mismatch, an empty
// start, or a zero step.
std::vector<std::vector<double>> axis_simplex(const std::vector<double>& start,
                                              const std::vector<double>& steps);
std::vector<std::vector<double>> axis_simplex(const std::vector<double>& start,
                                              double step);

}  // namespace geowb
