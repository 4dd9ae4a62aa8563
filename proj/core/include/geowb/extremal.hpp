#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "geowb/hyptrig.hpp"

namespace geowb {

// One accepted improvement during refinement: the start that produced it,
// that start's local evaluation count at acceptance, the point (search
// chart), and the objective value there.
struct OptStep {
  std::size_t start_index = 0;
  std::size_t evaluation = 0;
  std::vector<double> point;
  double value = 0.0;
};

// Record of one systole-maximization run over Fenchel-Nielsen coordinates.
// Search chart: every cuff length l is a plain coordinate; every twist is
// stored as the scale-free fraction s = tau/l in [0, 1), so the twist-
// periodic direction wraps exactly (a full twist is a marking shift only).
// best_value is the systole at best_point recomputed independently of the
// optimization objective (enumeration with canonical-word evaluation), and
// the constructor of the run verifies the two routes agree within 1e-6.
struct OptRun {
  std::string chart;              // names the search-chart coordinates
  std::vector<double> box_lo;     // parameter box, search chart
  std::vector<double> box_hi;
  std::vector<std::size_t> grid;  // coarse sample grid shape over the box
  std::vector<OptStep> trace;     // refinement trace, merged by start index
  std::vector<double> best_point;     // search chart (lengths, fractions)
  std::vector<double> best_point_fn;  // same point as (lengths, twists)
  double best_value = 0.0;
  double bound = 0.0;        // sharp upper bound the run is tested against
  double max_sampled = 0.0;  // largest objective value seen at any sample
  std::size_t witness_count = 0;  // classes within witness_tol of best_value
  double witness_tol = 1e-4;
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
  std::string status;  // "ok" | "budget_exhausted"
};

// Documented budget minima (objective evaluations).
inline constexpr std::size_t torus_opt_min_budget = 1500;
inline constexpr std::size_t genus2_opt_min_budget = 600;

// Maximize the interior systole of the one-holed torus with boundary length
// b over (l, tau): coarse grid on [0.1, 3*bound] x [0, l) (as fractions),
// Nelder-Mead refinement from the top 5 cells, then polish stages around
// the incumbent. The objective is the exact simple-spectrum minimum from
// the trace tree at a fixed cutoff just above the sharp bound
// max_systole_bound(b); boundary-parallel classes are not part of the
// moduli search (their length is the constant b). The chart is not
// injective on moduli space (remarking by a mapping class moves the same
// unmarked surface to another chart point), so the found maximizer is
// remarked into the canonical chart before reporting: the cuff becomes a
// shortest interior curve via the minimal trace triple and the twist is
// reduced into [0, l/2] (mirror symmetry); a rebuilt-surface systole check
// certifies the remarking changed nothing. Any sample exceeding the sharp
// bound by more than 1e-8 throws std::runtime_error (it would contradict
// the bound); a run that ends before tolerances are met is flagged status
// "budget_exhausted", never an exception. Throws std::domain_error for
// b < 0 and std::invalid_argument for a budget below torus_opt_min_budget.
OptRun maximize_torus_systole(Length b, std::size_t budget = 4000);

// Maximize the systole of the fixed theta-graph genus-2 surface over its 6
// Fenchel-Nielsen coordinates: symmetric seeds (the theta graph has an
// order-3 isometry cycling its cuffs, so the equal-coordinate locus is the
// natural seed family), Nelder-Mead on that locus from the best seeds,
// seeded random 6-coordinate starts, then full 6-coordinate polish stages
// around the incumbent; starts run in order and evaluations are pure, so a
// fixed seed gives a bit-identical trace merged by start index. The
// objective is the enumeration fast path at a fixed cutoff just above the
// sharp bound genus2_systole_bound(), with a reduced search margin
// (validated against the default margin on a sample of the box; the two
// never disagreed beyond candidate noise). best_value is recomputed by the
// canonical full-margin systole at the best point and must agree with the
// objective route within 1e-6. Any value exceeding the bound by more than
// 1e-6 throws std::runtime_error. Throws std::invalid_argument for a
// budget below genus2_opt_min_budget.
OptRun maximize_genus2_systole(std::size_t budget, std::uint64_t seed = 1);

// One member of the half-twist maximizer family: the torus with interior
// curve length bound = max_systole_bound(b), twist bound/2, boundary b.
struct FamilyPoint {
  Length b = 0.0;
  Length bound = 0.0;    // max_systole_bound(b)
  Length systole = 0.0;  // realized simple-spectrum minimum
  int systole_multiplicity = 0;
  int histogram_max = 0;  // largest multiplicity up to the cutoff
};

struct FamilyReport {
  std::vector<FamilyPoint> points;
  Length cutoff = 0.0;
  int histogram_max = 0;  // max over the family; reported, never asserted
};

// Build the half-twist maximizer for n_points boundary lengths evenly
// spaced in [b_lo, b_hi] and report each member's simple-spectrum
// multiplicity histogram up to the cutoff. Throws std::invalid_argument
// for an empty or inverted range, n_points < 1, or a cutoff at or below
// the family's largest systole bound (the histogram would be empty).
FamilyReport scan_multiplicity_family(Length b_lo, Length b_hi, int n_points,
                                      Length cutoff = 10.0);

// JSON reports (2-space indent, stable key order).
std::string opt_run_json(const OptRun& run);
std::string family_report_json(const FamilyReport& report);

}  // namespace geowb
