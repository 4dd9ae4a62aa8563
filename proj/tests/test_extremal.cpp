#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "geowb/constants.hpp"
#include "geowb/enumerate.hpp"
#include "geowb/extremal.hpp"
#include "geowb/holonomy.hpp"
#include "geowb/nelder_mead.hpp"
#include "geowb/onetorus.hpp"

using namespace geowb;

TEST_CASE("extremal: Nelder-Mead maximizes smooth and kinked objectives") {
  auto bowl = [](const std::vector<double>& x) {
    return -(x[0] - 1) * (x[0] - 1) - 2 * (x[1] + 0.5) * (x[1] + 0.5);
  };
  const auto res =
      nelder_mead_maximize(bowl, axis_simplex({0.0, 0.0}, 0.5), 500, 1e-14,
                           1e-7);
  CHECK(res.converged);
  CHECK(std::abs(res.point[0] - 1.0) < 1e-6);
  CHECK(std::abs(res.point[1] + 0.5) < 1e-6);
  CHECK(res.evaluations <= 500);

  // Identical rerun, bit for bit.
  const auto res2 =
      nelder_mead_maximize(bowl, axis_simplex({0.0, 0.0}, 0.5), 500, 1e-14,
                           1e-7);
  CHECK(res.point == res2.point);
  CHECK(res.value == res2.value);
  CHECK(res.evaluations == res2.evaluations);

  // Budget exhaustion is flagged, not thrown; absurd budgets are rejected.
  const auto res3 =
      nelder_mead_maximize(bowl, axis_simplex({0.0, 0.0}, 0.5), 12, 1e-14,
                           1e-12);
  CHECK(!res3.converged);
  CHECK(res3.evaluations <= 12);
  CHECK_THROWS_AS(nelder_mead_maximize(bowl, axis_simplex({0.0, 0.0}, 0.5), 2,
                                       1e-9, 1e-9),
                  std::invalid_argument);

  // A tent maximum (the systole objective is piecewise smooth too), with a
  // polish restart as the optimizers use.
  auto tent = [](const std::vector<double>& x) {
    return -std::abs(x[0] - 0.3) - std::abs(x[1] - 0.7);
  };
  const auto t1 =
      nelder_mead_maximize(tent, axis_simplex({0.0, 0.0}, 0.4), 400, 1e-9,
                           1e-8);
  const auto t2 =
      nelder_mead_maximize(tent, axis_simplex(t1.point, 1e-4), 400, 1e-12,
                           1e-10);
  CHECK(std::abs(t2.point[0] - 0.3) < 1e-7);
  CHECK(std::abs(t2.point[1] - 0.7) < 1e-7);
}

TEST_CASE("extremal: torus optimizer hits the sharp bound at a half twist") {
  for (double b : {0.0, 1.0, 2.0, 4.0, 6.0}) {
    const OptRun run = maximize_torus_systole(b);
    const double bound = max_systole_bound(b);
    CHECK(run.best_value >= bound - 1e-4);
    CHECK(run.best_value <= bound + 1e-8);
    CHECK(run.max_sampled <= bound + 1e-8);
    CHECK(run.witness_count == 3);
    CHECK(std::abs(run.best_point[1] - 0.5) < 1e-6);    // twist fraction 1/2
    CHECK(std::abs(run.best_point[0] - bound) < 1e-6);  // cuff at the bound
    CHECK(std::abs(run.best_point_fn[1] - 0.5 * run.best_point_fn[0]) <
          1e-6);
    CHECK(run.status == "ok");
    CHECK(run.evaluations <= 4000);
    CHECK(std::abs(run.bound - bound) <= 1e-15);
  }
}

TEST_CASE("extremal: torus maxima increase with the boundary length") {
  const OptRun r0 = maximize_torus_systole(0.0);
  const OptRun r1 = maximize_torus_systole(1.5);
  const OptRun r2 = maximize_torus_systole(3.0);
  CHECK(r0.best_value < r1.best_value);
  CHECK(r1.best_value < r2.best_value);

  // Determinism: bit-identical rerun, trace included.
  const OptRun r0b = maximize_torus_systole(0.0);
  CHECK(r0.best_value == r0b.best_value);
  CHECK(r0.best_point == r0b.best_point);
  REQUIRE(r0.trace.size() == r0b.trace.size());
  for (std::size_t i = 0; i < r0.trace.size(); ++i) {
    CHECK(r0.trace[i].start_index == r0b.trace[i].start_index);
    CHECK(r0.trace[i].evaluation == r0b.trace[i].evaluation);
    CHECK(r0.trace[i].point == r0b.trace[i].point);
    CHECK(r0.trace[i].value == r0b.trace[i].value);
  }

  // The JSON report parses and carries the run.
  const nlohmann::json j = nlohmann::json::parse(opt_run_json(r0));
  CHECK(j["status"] == "ok");
  CHECK(j["witness_count"] == 3);
  CHECK(std::abs(j["best_value"].get<double>() - r0.best_value) == 0.0);

  CHECK_THROWS_AS(maximize_torus_systole(-0.5), std::domain_error);
  CHECK_THROWS_AS(maximize_torus_systole(0.0, torus_opt_min_budget - 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(maximize_genus2_systole(genus2_opt_min_budget - 1),
                  std::invalid_argument);
}

TEST_CASE("extremal: half-twist family keeps its triple systole") {
  const FamilyReport rep = scan_multiplicity_family(0.0, 4.0, 5);
  REQUIRE(rep.points.size() == 5);
  CHECK(rep.points.front().systole_multiplicity == 3);
  for (const FamilyPoint& p : rep.points) {
    CHECK(std::abs(p.systole - p.bound) < 1e-9);
    CHECK(std::abs(p.bound - max_systole_bound(p.b)) < 1e-12);
    CHECK(p.systole_multiplicity >= 3);
  }
  CHECK(rep.histogram_max >= 3);
  // A cutoff below the family's largest bound has no spectrum to report.
  CHECK_THROWS_AS(scan_multiplicity_family(0.0, 4.0, 5, 2.0),
                  std::invalid_argument);
  CHECK(!family_report_json(rep).empty());
}

TEST_CASE("extremal: genus-2 objective stays under the ceiling") {
  const double cutoff = genus2_systole_bound() + 0.05;
  const HolonomyRep rep = holonomy(
      genus2_graph(), genus2_fn(2.9, 2.9, 2.9, 1.45, 1.45, 1.45));
  const double v = shortest_geodesic_length(rep, cutoff);
  CHECK(v <= genus2_systole_bound() + 1e-6);
  CHECK(v > 0.0);
}
