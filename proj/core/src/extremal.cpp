#include "geowb/extremal.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geowb/constants.hpp"
#include "geowb/enumerate.hpp"
#include "geowb/holonomy.hpp"
#include "geowb/hyptrig.hpp"
#include "geowb/nelder_mead.hpp"
#include "geowb/onetorus.hpp"
#include "geowb/spectra.hpp"
#include "geowb/trace_tree.hpp"

namespace geowb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWitnessTol = 1e-4;
constexpr double kTorusOvershoot = 1e-8;   // sharp-bound slack, torus
constexpr double kGenus2Overshoot = 1e-6;  // sharp-bound slack, genus 2
constexpr double kRouteAgreement = 1e-6;   // objective vs canonical systole

double wrap_unit(double s) {
  const double f = s - std::floor(s);
  return (f >= 0.0 && f < 1.0) ? f : 0.0;
}

// Remark a one-holed torus into the canonical chart: the chart is not
// injective on moduli space, so different (l, tau) points can carry the
// same unmarked surface. The minimal trace triple picks the marking whose
// cuff is a shortest interior curve; the twist then follows from the dual
// trace relation tr(dual at tau) = 2 cosh(c/2) cosh(tau/2), with c the
// seam perpendicular of the hexagon relation, and lands in [0, l/2] (the
// mirror-canonical half) because the minimal triple keeps the smaller of
// the two adjacent dual traces.
std::pair<double, double> canonical_torus_marking(double l, double tau, double b) {
  const HolonomyRep rep = holonomy(torus_graph(), torus_fn(l, tau, b));
  const MinimalTriple mt = minimal_triple(torus_traces(rep));
  double t_cuff = mt.triple.x, t_dual = mt.triple.y;
  if (t_dual < t_cuff) std::swap(t_cuff, t_dual);
  const double l_cuff = 2.0 * std::acosh(t_cuff / 2.0);
  const double c = hexagon_perp(b, l_cuff);
  const double dual_arg = t_dual / (2.0 * std::cosh(c / 2.0));
  const double tau_canon = 2.0 * std::acosh(std::max(1.0, dual_arg));
  return {l_cuff, tau_canon};
}

// Bookkeeping shared by every sample of one run: global budget spending,
// largest value seen anywhere, sharp-bound enforcement, per-start trace.
struct Sampler {
  std::function<double(const std::vector<double>&)> raw;
  std::function<std::vector<double>(const std::vector<double>&)> wrap;
  OptRun* run = nullptr;
  double bound = 0.0;
  double overshoot = 0.0;
  const char* overshoot_what = "";
  double best_value = -kInf;       // objective route
  std::vector<double> best_point;  // wrapped search-chart point
  std::size_t start_index = 0;
  std::size_t local_evals = 0;
  double local_best = -kInf;

  void begin_start(std::size_t index) {
    start_index = index;
    local_evals = 0;
    local_best = -kInf;
  }

  double operator()(const std::vector<double>& x) {
    const double v = raw(x);
    ++run->evaluations;
    ++local_evals;
    if (v > run->max_sampled) run->max_sampled = v;
    if (v > bound + overshoot) throw std::runtime_error(overshoot_what);
    if (v > local_best) {
      local_best = v;
      run->trace.push_back(OptStep{start_index, local_evals, wrap(x), v});
    }
    if (v > best_value) {
      best_value = v;
      best_point = wrap(x);
    }
    return v;
  }
};

}  // namespace

OptRun maximize_torus_systole(Length b, std::size_t budget) {
  const double bound = max_systole_bound(b);
  if (budget < torus_opt_min_budget)
    throw std::invalid_argument("budget below the documented torus minimum");

  OptRun run;
  run.chart = "(l, tau/l)";
  run.box_lo = {0.1, 0.0};
  run.box_hi = {3.0 * bound, 1.0};
  run.grid = {24, 16};
  run.bound = bound;
  run.max_sampled = -kInf;
  run.witness_tol = kWitnessTol;
  run.seed = 0;

  // Exact objective: the simple-spectrum minimum from the trace tree at a
  // fixed cutoff just above the sharp bound. The interior systole never
  // exceeds the bound, so the tree is nonempty at every valid point.
  const double cutoff = bound + 0.05;
  Sampler sample;
  sample.raw = [b, cutoff](const std::vector<double>& x) -> double {
    if (!(x[0] > 0.05) || x[0] > 60.0) return -kInf;
    try {
      const HolonomyRep rep =
          holonomy(torus_graph(), torus_fn(x[0], wrap_unit(x[1]) * x[0], b));
      const SimpleSpectrum tree = trace_tree(rep, cutoff);
      if (tree.entries.empty()) return -kInf;
      return tree.entries.front().length;
    } catch (const std::exception&) {
      return -kInf;
    }
  };
  sample.wrap = [](const std::vector<double>& x) {
    return std::vector<double>{x[0], wrap_unit(x[1])};
  };
  sample.run = &run;
  sample.bound = bound;
  sample.overshoot = kTorusOvershoot;
  sample.overshoot_what = "sampled torus systole exceeds the sharp bound";

  // Coarse grid over cell centers (start 0 of the trace).
  struct Cell {
    double value;
    double l, s;
    std::size_t index;
  };
  std::vector<Cell> cells;
  sample.begin_start(0);
  const std::size_t nl = run.grid[0], ns = run.grid[1];
  const double dl = (run.box_hi[0] - run.box_lo[0]) / static_cast<double>(nl);
  for (std::size_t i = 0; i < nl; ++i) {
    const double l = run.box_lo[0] + (static_cast<double>(i) + 0.5) * dl;
    for (std::size_t j = 0; j < ns; ++j) {
      const double s = (static_cast<double>(j) + 0.5) / static_cast<double>(ns);
      cells.push_back(Cell{sample({l, s}), l, s, cells.size()});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& c) {
    if (a.value != c.value) return a.value > c.value;
    return a.index < c.index;
  });

  // Local refinement from the top 5 cells, then polish stages around the
  // incumbent with shrinking simplices (the objective is a max of a tent:
  // restarts recover from contraction stalls on the ridge).
  const std::size_t n_starts = 5;
  const std::size_t polish_budget = 600;
  const std::size_t per_start = (budget - nl * ns - polish_budget) / n_starts;
  for (std::size_t k = 0; k < n_starts; ++k) {
    sample.begin_start(k + 1);
    nelder_mead_maximize(std::ref(sample),
                         axis_simplex({cells[k].l, cells[k].s},
                                      {0.5 * dl, 0.5 / static_cast<double>(ns)}),
                         per_start, 1e-6, 1e-5);
  }
  bool tol_met = false;
  const double polish_steps[3] = {1e-3, 1e-5, 1e-7};
  for (int stage = 0; stage < 3; ++stage) {
    sample.begin_start(n_starts + 1 + static_cast<std::size_t>(stage));
    const auto res = nelder_mead_maximize(
        std::ref(sample),
        axis_simplex(sample.best_point, {polish_steps[stage], polish_steps[stage]}),
        polish_budget / 3, 1e-8, 1e-8);
    tol_met = res.converged;
  }
  run.status = tol_met ? "ok" : "budget_exhausted";

  if (sample.best_point.empty() || !std::isfinite(sample.best_value))
    throw std::runtime_error("torus systole search found no valid sample");

  // Remark the found surface into the canonical chart, then verify the
  // remarked point carries the same systole (same unmarked surface).
  const auto [l_best, tau_best] = canonical_torus_marking(
      sample.best_point[0], sample.best_point[1] * sample.best_point[0], b);
  const HolonomyRep rep = holonomy(torus_graph(), torus_fn(l_best, tau_best, b));
  {
    const SimpleSpectrum check = trace_tree(rep, cutoff);
    if (check.entries.empty() ||
        std::abs(check.entries.front().length - sample.best_value) > 1e-7)
      throw std::runtime_error("torus marking canonicalization failed");
  }

  // Independent recomputation at the best point: enumeration with
  // canonical-word evaluation, boundary-parallel classes (powers of the
  // boundary word) removed. The boundary length is the constant b, not a
  // property of the searched interior geometry.
  const GeodesicSpectrum spec = enumerate_geodesics(rep, cutoff);
  std::set<std::string> boundary_keys;
  if (b > 0.0) {
    const std::string& bw = rep.boundary_words.front();
    for (int k = 1; static_cast<double>(k) * b <= cutoff + 1.0; ++k) {
      std::string w;
      for (int i = 0; i < k; ++i) w += bw;
      boundary_keys.insert(canonical_cyclic(w));
    }
  }
  double canonical = kInf;
  for (const GeodesicClass& gc : spec.classes)
    if (!boundary_keys.count(gc.word)) canonical = std::min(canonical, gc.length);
  if (!std::isfinite(canonical))
    throw std::runtime_error("interior systole enumeration came back empty");
  if (std::abs(canonical - sample.best_value) > kRouteAgreement)
    throw std::runtime_error("systole routes disagree at the torus best point");
  if (canonical > bound + kTorusOvershoot)
    throw std::runtime_error("torus systole exceeds the sharp bound");
  run.best_value = canonical;
  run.best_point = {l_best, tau_best / l_best};
  run.best_point_fn = {l_best, tau_best};

  const SimpleSpectrum witnesses = trace_tree(rep, canonical + 0.01);
  run.witness_count = 0;
  for (const SimpleEntry& e : witnesses.entries)
    if (e.length <= canonical + kWitnessTol) ++run.witness_count;
  return run;
}

OptRun maximize_genus2_systole(std::size_t budget, std::uint64_t seed) {
  if (budget < genus2_opt_min_budget)
    throw std::invalid_argument("budget below the documented genus-2 minimum");
  const double bound = genus2_systole_bound();

  OptRun run;
  run.chart = "(l0, l1, l2, tau0/l0, tau1/l1, tau2/l2)";
  run.box_lo = {1.2, 1.2, 1.2, 0.0, 0.0, 0.0};
  run.box_hi = {5.0, 5.0, 5.0, 1.0, 1.0, 1.0};
  run.grid = {4, 2};  // symmetric (l, l, l, s, s, s) seed grid
  run.bound = bound;
  run.max_sampled = -kInf;
  run.witness_tol = kWitnessTol;
  run.seed = seed;

  // Fast-path objective at a fixed cutoff just above the sharp bound; the
  // genus-2 systole never exceeds the bound, so the ball always contains
  // the minimum at a valid point. Degenerate coordinates evaluate to -inf.
  // The reduced search margin was validated against the default margin
  // across the box (identical class minima, candidate noise only); the
  // final value is recomputed at the default margin and must agree.
  const double cutoff = bound + 0.05;
  const double search_margin = 0.3;
  Sampler sample;
  sample.raw = [cutoff, search_margin](const std::vector<double>& x) -> double {
    for (int i = 0; i < 3; ++i)
      if (!(x[i] > 0.2) || x[i] > 8.0) return -kInf;
    try {
      const HolonomyRep rep = holonomy(
          genus2_graph(), genus2_fn(x[0], x[1], x[2], wrap_unit(x[3]) * x[0],
                                    wrap_unit(x[4]) * x[1], wrap_unit(x[5]) * x[2]));
      const double v = shortest_geodesic_length(rep, cutoff, search_margin);
      return std::isfinite(v) ? v : -kInf;
    } catch (const std::exception&) {
      return -kInf;
    }
  };
  sample.wrap = [](const std::vector<double>& x) {
    return std::vector<double>{x[0],           x[1],           x[2],
                               wrap_unit(x[3]), wrap_unit(x[4]), wrap_unit(x[5])};
  };
  sample.run = &run;
  sample.bound = bound;
  sample.overshoot = kGenus2Overshoot;
  sample.overshoot_what = "sampled genus-2 systole exceeds the sharp bound";

  // Symmetric seeds (start 0): the theta graph has an order-3 isometry
  // cycling its three cuffs, so the equal-coordinate locus is a natural
  // seed family; random starts probe the full box.
  struct Seed {
    double value;
    std::vector<double> x;
    std::size_t index;
  };
  std::vector<Seed> seeds;
  sample.begin_start(0);
  for (double l : {2.2, 2.8, 3.4, 4.0})
    for (double s : {0.25, 0.5}) {
      std::vector<double> x{l, l, l, s, s, s};
      seeds.push_back(Seed{sample(x), x, seeds.size()});
    }
  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& c) {
    if (a.value != c.value) return a.value > c.value;
    return a.index < c.index;
  });

  // Budget split: two refinements on the symmetric locus from the best
  // seeds, three random full-coordinate starts, three full-coordinate
  // polish stages around the incumbent.
  const std::size_t usable = budget - seeds.size();
  const std::size_t per_sym = usable * 18 / 100;
  const std::size_t per_rand = usable * 8 / 100;
  const std::size_t per_polish = usable * 13 / 100;

  auto expand = [](const std::vector<double>& x2) {
    return std::vector<double>{x2[0], x2[0], x2[0], x2[1], x2[1], x2[1]};
  };
  for (std::size_t k = 0; k < 2; ++k) {
    sample.begin_start(k + 1);
    auto symmetric = [&sample, &expand](const std::vector<double>& x2) {
      return sample(expand(x2));
    };
    nelder_mead_maximize(symmetric,
                         axis_simplex({seeds[k].x[0], seeds[k].x[3]}, {0.3, 0.08}),
                         per_sym, 1e-7, 1e-6);
  }

  std::mt19937_64 rng(seed);
  auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<double> x(6);
    for (int i = 0; i < 3; ++i) x[i] = run.box_lo[i] + u01() * (run.box_hi[i] - run.box_lo[i]);
    for (int i = 3; i < 6; ++i) x[i] = u01();
    sample.begin_start(3 + k);
    nelder_mead_maximize(std::ref(sample),
                         axis_simplex(x, {0.3, 0.3, 0.3, 0.08, 0.08, 0.08}),
                         per_rand, 1e-4, 1e-3);
  }

  bool tol_met = false;
  const double polish_steps[3] = {2e-3, 1e-4, 1e-5};
  for (int stage = 0; stage < 3; ++stage) {
    sample.begin_start(6 + static_cast<std::size_t>(stage));
    std::vector<double> steps(6, polish_steps[stage]);
    const auto res = nelder_mead_maximize(
        std::ref(sample), axis_simplex(sample.best_point, steps), per_polish,
        1e-6, 3e-5);
    tol_met = res.converged;
  }
  run.status = tol_met ? "ok" : "budget_exhausted";

  if (sample.best_point.empty() || !std::isfinite(sample.best_value))
    throw std::runtime_error("genus-2 systole search found no valid sample");

  // Canonical recomputation and witnesses at the best point.
  const std::vector<double>& p = sample.best_point;
  const HolonomyRep rep =
      holonomy(genus2_graph(), genus2_fn(p[0], p[1], p[2], p[3] * p[0],
                                         p[4] * p[1], p[5] * p[2]));
  const SystoleResult sys = systole(rep);
  if (sys.status != "ok")
    throw std::runtime_error("systole inconclusive at the genus-2 best point");
  if (std::abs(sys.length - sample.best_value) > kRouteAgreement)
    throw std::runtime_error("systole routes disagree at the genus-2 best point");
  if (sys.length > bound + kGenus2Overshoot)
    throw std::runtime_error("genus-2 systole exceeds the sharp bound");
  run.best_value = sys.length;
  run.best_point = p;
  run.best_point_fn = {p[0], p[1], p[2], p[3] * p[0], p[4] * p[1], p[5] * p[2]};

  const GeodesicSpectrum spec = enumerate_geodesics(rep, sys.length + 0.01);
  run.witness_count = 0;
  for (const GeodesicClass& gc : spec.classes)
    if (gc.length <= sys.length + kWitnessTol) ++run.witness_count;
  return run;
}

FamilyReport scan_multiplicity_family(Length b_lo, Length b_hi, int n_points,
                                      Length cutoff) {
  if (n_points < 1) throw std::invalid_argument("need at least one family member");
  if (!(b_hi >= b_lo) || b_lo < 0.0) throw std::invalid_argument("bad boundary range");
  if (max_systole_bound(b_hi) >= cutoff)
    throw std::invalid_argument("cutoff at or below the family's systole bound");

  FamilyReport report;
  report.cutoff = cutoff;
  for (int i = 0; i < n_points; ++i) {
    const double b =
        n_points == 1
            ? b_lo
            : b_lo + (b_hi - b_lo) * static_cast<double>(i) / (n_points - 1);
    const double bound = max_systole_bound(b);
    const HolonomyRep rep =
        holonomy(torus_graph(), torus_fn(bound, 0.5 * bound, b));
    const SimpleSpectrum tree = trace_tree(rep, cutoff);
    const MultiplicityHistogram hist = multiplicity_histogram(tree);
    FamilyPoint point;
    point.b = b;
    point.bound = bound;
    point.systole = tree.entries.front().length;
    point.systole_multiplicity = hist.buckets.front().second;
    point.histogram_max = hist.max_multiplicity;
    report.histogram_max = std::max(report.histogram_max, hist.max_multiplicity);
    report.points.push_back(point);
  }
  return report;
}

std::string opt_run_json(const OptRun& run) {
  nlohmann::ordered_json j;
  j["chart"] = run.chart;
  j["box_lo"] = run.box_lo;
  j["box_hi"] = run.box_hi;
  j["grid"] = run.grid;
  j["best_point"] = run.best_point;
  j["best_point_fn"] = run.best_point_fn;
  j["best_value"] = run.best_value;
  j["bound"] = run.bound;
  j["max_sampled"] = run.max_sampled;
  j["witness_count"] = run.witness_count;
  j["witness_tol"] = run.witness_tol;
  j["evaluations"] = run.evaluations;
  j["seed"] = run.seed;
  j["status"] = run.status;
  j["trace"] = nlohmann::ordered_json::array();
  for (const OptStep& step : run.trace) {
    nlohmann::ordered_json s;
    s["start"] = step.start_index;
    s["evaluation"] = step.evaluation;
    s["point"] = step.point;
    s["value"] = step.value;
    j["trace"].push_back(std::move(s));
  }
  return j.dump(2);
}

std::string family_report_json(const FamilyReport& report) {
  nlohmann::ordered_json j;
  j["cutoff"] = report.cutoff;
  j["histogram_max"] = report.histogram_max;
  j["points"] = nlohmann::ordered_json::array();
  for (const FamilyPoint& p : report.points) {
    nlohmann::ordered_json q;
    q["b"] = p.b;
    q["bound"] = p.bound;
    q["systole"] = p.systole;
    q["systole_multiplicity"] = p.systole_multiplicity;
    q["histogram_max"] = p.histogram_max;
    j["points"].push_back(std::move(q));
  }
  return j.dump(2);
}

}  // namespace geowb
