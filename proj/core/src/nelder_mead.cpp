#include "geowb/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace geowb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vertex {
  std::vector<double> x;
  double value = -kInf;
};

}  // namespace

NelderMeadResult nelder_mead_maximize(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<std::vector<double>> simplex, std::size_t max_evaluations,
    double value_tol, double point_tol) {
  if (simplex.size() < 2) throw std::invalid_argument("simplex needs at least two vertices");
  const std::size_t n = simplex.front().size();
  if (n + 1 != simplex.size()) throw std::invalid_argument("simplex must have dimension + 1 vertices");
  for (const auto& p : simplex)
    if (p.size() != n) throw std::invalid_argument("simplex vertices disagree in dimension");
  if (value_tol < 0.0 || point_tol < 0.0) throw std::invalid_argument("tolerances must be nonnegative");
  if (max_evaluations < simplex.size())
    throw std::invalid_argument("budget smaller than the initial simplex");

  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double v = objective(x);
    return std::isnan(v) ? -kInf : v;
  };

  std::vector<Vertex> vertices(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    vertices[i].x = std::move(simplex[i]);
    vertices[i].value = eval(vertices[i].x);
  }

  const auto better = [](const Vertex& a, const Vertex& b) { return a.value > b.value; };
  while (true) {
    std::stable_sort(vertices.begin(), vertices.end(), better);
    const Vertex& best = vertices.front();
    Vertex& worst = vertices.back();

    if (std::isfinite(best.value)) {
      double value_spread = best.value - worst.value;
      double point_spread = 0.0;
      for (std::size_t i = 1; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
          point_spread = std::max(point_spread, std::abs(vertices[i].x[j] - best.x[j]));
      if (value_spread <= value_tol && point_spread <= point_tol) {
        result.converged = true;
        break;
      }
    }
    if (result.evaluations >= max_evaluations) break;
    ++result.iterations;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += vertices[i].x[j];
    for (double& c : centroid) c /= static_cast<double>(n);

    auto along = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (centroid[j] - worst.x[j]);
      return p;
    };

    std::vector<double> reflected = along(1.0);
    const double fr = eval(reflected);
    if (fr > vertices.front().value) {
      if (result.evaluations < max_evaluations) {
        std::vector<double> expanded = along(2.0);
        const double fe = eval(expanded);
        if (fe > fr) {
          worst = Vertex{std::move(expanded), fe};
          continue;
        }
      }
      worst = Vertex{std::move(reflected), fr};
      continue;
    }
    if (fr > vertices[vertices.size() - 2].value) {
      worst = Vertex{std::move(reflected), fr};
      continue;
    }

    const bool outside = fr > worst.value;
    if (result.evaluations >= max_evaluations) break;
    std::vector<double> contracted = along(outside ? 0.5 : -0.5);
    const double fc = eval(contracted);
    if (outside ? fc >= fr : fc > worst.value) {
      worst = Vertex{std::move(contracted), fc};
      continue;
    }

    if (result.evaluations + n > max_evaluations) break;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j)
        vertices[i].x[j] = vertices.front().x[j] + 0.5 * (vertices[i].x[j] - vertices.front().x[j]);
      vertices[i].value = eval(vertices[i].x);
    }
  }

  std::stable_sort(vertices.begin(), vertices.end(), better);
  result.point = vertices.front().x;
  result.value = vertices.front().value;
  return result;
}

std::vector<std::vector<double>> axis_simplex(const std::vector<double>& start,
                                              const std::vector<double>& steps) {
  if (start.empty()) throw std::invalid_argument("empty start point");
  if (steps.size() != start.size()) throw std::invalid_argument("one step per coordinate required");
  for (double s : steps)
    if (s == 0.0 || std::isnan(s)) throw std::invalid_argument("steps must be nonzero");
  std::vector<std::vector<double>> simplex(start.size() + 1, start);
  for (std::size_t i = 0; i < start.size(); ++i) simplex[i + 1][i] += steps[i];
  return simplex;
}

std::vector<std::vector<double>> axis_simplex(const std::vector<double>& start, double step) {
  return axis_simplex(start, std::vector<double>(start.size(), step));
}

}  // namespace geowb
