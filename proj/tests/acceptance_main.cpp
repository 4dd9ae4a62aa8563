// Acceptance gate: every shipped guarantee checked end to end, one line of
// output per criterion. Exits nonzero if any line reads FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "geowb/enumerate.hpp"
#include "geowb/extremal.hpp"
#include "geowb/holonomy.hpp"
#include "geowb/hyptrig.hpp"
#include "geowb/markov.hpp"
#include "geowb/onetorus.hpp"
#include "geowb/slope.hpp"
#include "geowb/spectra.hpp"
#include "geowb/trace_tree.hpp"

using namespace geowb;

namespace {

int failures = 0;

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename F>
void criterion(int k, const char* name, F&& body) {
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("%s  [%d] %s  (%s)\n", ok ? "PASS" : "FAIL", k, name,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0,
                double c = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

Slope random_slope(std::mt19937_64& rng, int cap) {
  std::uniform_int_distribution<int> up(-cap, cap), uq(0, cap);
  for (;;) {
    const int p = up(rng), q = uq(rng);
    if (p == 0 && q == 0) continue;
    if (std::gcd(std::abs(p), q) != 1) continue;
    return canonical_slope(p, q);
  }
}

}  // namespace

int main() {
  const double lstar = 2.0 * std::acosh(1.5);

  criterion(1, "torus maximizer reaches the sharp bound at the half twist",
            [&](std::string& detail) {
              bool ok = true;
              double worst = 0.0, slowest = 0.0;
              for (double b : {0.0, 1.0, 2.0, 4.0, 6.0}) {
                const auto t0 = std::chrono::steady_clock::now();
                const OptRun run = maximize_torus_systole(b);
                const double dt = seconds(t0);
                const double bound = max_systole_bound(b);
                ok = ok && std::abs(run.best_value - bound) <= 1e-4;
                ok = ok && run.max_sampled <= bound + 1e-8;
                ok = ok && run.witness_count == 3;
                ok = ok && std::abs(run.best_point[1] - 0.5) <= 1e-6;
                ok = ok && run.status == "ok";
                ok = ok && dt <= 60.0;
                worst = std::max(worst, std::abs(run.best_value - bound));
                slowest = std::max(slowest, dt);
              }
              detail = fmt("worst |best-bound| %.2e, slowest run %.2f s",
                           worst, slowest);
              return ok;
            });

  criterion(2, "modular systole agrees across three routes",
            [&](std::string& detail) {
              const HolonomyRep rep = modular_torus();
              const double via_tree = trace_tree(rep, 2.5).entries.front().length;
              const SystoleResult sys = systole(rep);
              const double via_bound = max_systole_bound(0.0);
              detail = fmt("tree %.2e, enumeration %.2e, bound %.2e from "
                           "2 arccosh(3/2)",
                           std::abs(via_tree - lstar),
                           std::abs(sys.length - lstar),
                           std::abs(via_bound - lstar));
              return std::abs(via_tree - lstar) <= 1e-10 &&
                     std::abs(sys.length - lstar) <= 1e-10 &&
                     sys.status == "ok" &&
                     std::abs(via_bound - lstar) <= 1e-10;
            });

  criterion(3, "genus-2 maximizer reaches the ceiling with 12 witnesses",
            [&](std::string& detail) {
              const double bolza = 2.0 * std::acosh(1.0 + std::sqrt(2.0));
              const auto t0 = std::chrono::steady_clock::now();
              const OptRun run = maximize_genus2_systole(900);
              const double dt = seconds(t0);
              detail = fmt("best-bound %.2e, witnesses %.0f, %.0f s",
                           run.best_value - bolza,
                           double(run.witness_count), dt);
              return run.best_value >= bolza - 1e-2 &&
                     run.best_value <= bolza + 1e-6 &&
                     run.max_sampled <= bolza + 1e-6 &&
                     run.witness_count == 12 && run.witness_tol == 1e-4 &&
                     dt <= 1800.0;
            });

  criterion(4, "simple traces to 600 are exactly 3x the Markov numbers",
            [&](std::string& detail) {
              const auto t0 = std::chrono::steady_clock::now();
              const CorrespondenceReport cr = modular_correspondence(200);
              const FrobeniusReport fr = frobenius_scan(1000000);
              const double dt = seconds(t0);
              detail = fmt("status %.0f buckets, %.0f collisions, %.2f s",
                           double(cr.trace_multiplicities.size()),
                           double(fr.collisions.size()), dt);
              detail = "status " + cr.status + ", " + detail;
              return cr.matched && cr.status == "exact match" &&
                     cr.systole_multiplicity == 3 && fr.unique &&
                     fr.collisions.empty() && dt <= 60.0;
            });

  criterion(5, "polynomial simple growth against exponential full growth",
            [&](std::string& detail) {
              const HolonomyRep rep = modular_torus();
              std::vector<std::pair<Length, std::int64_t>> counts;
              for (double L = 20.0; L <= 80.0; L += 4.0)
                counts.emplace_back(L, count_simple(rep, L));
              const GrowthFit fit = growth_fit(counts);
              const HuberReport hub = huber_check(rep, 6.0, 12.0, 13);
              detail = fmt("simple exponent %.4f, full slope %.4f",
                           fit.exponent, hub.slope);
              return std::abs(fit.exponent - 2.0) <= 0.1 &&
                     std::abs(hub.slope - 1.0) <= 0.15;
            });

  criterion(6, "McShane partial sums rise to 1/2 under their tail bound",
            [&](std::string& detail) {
              const HolonomyRep rep = modular_torus();
              bool ok = true;
              double prev = -1.0;
              for (double L : {8.0, 12.0, 16.0, 20.0, 25.0}) {
                const McShaneResult m = mcshane_sum(rep, L);
                ok = ok && m.sum > prev;
                prev = m.sum;
              }
              const McShaneResult m25 = mcshane_sum(rep, 25.0);
              detail = fmt("sum(25) = 0.5 - %.2e, tail bound %.2e",
                           0.5 - m25.sum, m25.tail_bound);
              return ok && m25.sum < 0.5 && std::abs(m25.sum - 0.5) <= 1e-3 &&
                     0.5 - m25.sum <= m25.tail_bound;
            });

  criterion(7, "collar crossing bound and polygon identities hold",
            [&](std::string& detail) {
              std::mt19937_64 rng(20260817);
              std::uniform_real_distribution<double> ul(0.8, 3.0);
              std::uniform_real_distribution<double> ub(0.0, 2.5);
              std::uniform_real_distribution<double> ufrac(0.0, 1.0);
              bool ok = true;
              int pairs = 0;
              for (int s = 0; s < 10; ++s) {
                const double l = ul(rng);
                const HolonomyRep rep = holonomy(
                    torus_graph(), torus_fn(l, ufrac(rng) * l, ub(rng)));
                const TraceTriple tri = torus_traces(rep);
                for (int k = 0; k < 1000; ++k) {
                  const Slope s1 = random_slope(rng, 12);
                  Slope s2 = random_slope(rng, 12);
                  while (s2 == s1) s2 = random_slope(rng, 12);
                  const double l1 = slope_length(tri, s1);
                  const double l2 = slope_length(tri, s2);
                  // Distinct slopes always cross on the one-holed torus.
                  ok = ok && l2 >= 2.0 * collar_width(l1) - 1e-12;
                  ok = ok && l1 >= 2.0 * collar_width(l2) - 1e-12;
                  ++pairs;
                }
              }
              std::uniform_real_distribution<double> us(0.01, 12.0);
              std::uniform_real_distribution<double> ug(0.0, 6.0);
              std::uniform_real_distribution<double> ud(0.05, 6.0);
              int samples = 0;
              for (int i = 0; i < 100000; ++i) {
                double a = us(rng), c = us(rng);
                if (a > c) std::swap(a, c);
                if (c - a > 1e-9)
                  ok = ok && collar_width(a) > collar_width(c);
                const double lg = ug(rng), ld = ud(rng);
                const double h = hexagon_perp(lg, ld);
                ok = ok &&
                     std::abs(h - pentagon_perp(lg, ld)) <=
                         1e-10 * std::max(1.0, h);
                ++samples;
              }
              detail = fmt("%.0f crossing pairs, %.0f identity samples",
                           double(pairs), double(samples));
              return ok;
            });

  criterion(8, "quintic root isolated and bracketed by the genus-2 bounds",
            [&](std::string& detail) {
              const auto t0 = std::chrono::steady_clock::now();
              const double x0 = gendulphe_root();
              const double B = gendulphe_constant();
              const double dt = seconds(t0);
              // Unique sign change over (1, 2) on a 4096-point scan.
              int sign_changes = 0;
              double prev = gendulphe_quintic(1.0);
              for (int i = 1; i <= 4096; ++i) {
                const double x = 1.0 + i / 4096.0;
                const double v = gendulphe_quintic(x);
                if (prev < 0.0 && v >= 0.0) ++sign_changes;
                if (prev > 0.0 && v <= 0.0) ++sign_changes;
                prev = v;
              }
              detail = fmt("x0 %.15f, sign changes %.0f, %.3f s", x0,
                           double(sign_changes), dt);
              return x0 > 1.0 && x0 < 2.0 && sign_changes == 1 &&
                     gendulphe_quintic(x0 - 2e-12) < 0.0 &&
                     gendulphe_quintic(x0 + 2e-12) > 0.0 &&
                     std::abs(B - 12.0 * std::acosh(x0)) <= 1e-12 &&
                     B >= bers_constant_lower(2) &&
                     B <= bers_constant_upper(2) && dt < 1.0;
            });

  criterion(9, "trace tree and word holonomy are interchangeable oracles",
            [&](std::string& detail) {
              std::mt19937_64 rng(97);
              std::uniform_real_distribution<double> ul(1.2, 2.8);
              std::uniform_real_distribution<double> ub(0.2, 1.5);
              std::uniform_real_distribution<double> ufrac(0.0, 1.0);
              bool ok = true;
              int slopes = 0;
              std::vector<HolonomyRep> reps;
              for (int s = 0; s < 5; ++s) {
                const double l = ul(rng);
                reps.push_back(holonomy(torus_graph(),
                                        torus_fn(l, ufrac(rng) * l, ub(rng))));
              }
              for (const HolonomyRep& rep : reps) {
                const TraceTriple tri = torus_traces(rep);
                for (int p = -8; p <= 8; ++p)
                  for (int q = 0; q <= 8; ++q) {
                    if ((p == 0 && q == 0) ||
                        std::gcd(std::abs(p), q) != 1)
                      continue;
                    const Slope sl = canonical_slope(p, q);
                    const std::string w = christoffel(sl);
                    ok = ok && std::abs(slope_length(tri, sl) -
                                        word_length(rep, w)) <= 1e-9;
                    const double tw = slope_trace(tri, sl);
                    ok = ok &&
                         std::abs(tw -
                                  std::abs(word_image(rep, w).trace())) <=
                             1e-9 * std::max(1.0, tw);
                    ++slopes;
                  }
              }
              // Enumeration restricted to simple classes equals the tree.
              std::size_t tree_total = 0;
              reps.push_back(modular_torus());
              for (const HolonomyRep& rep : reps) {
                const GeodesicSpectrum spec = enumerate_geodesics(rep, 8.0);
                const SimpleSpectrum tree = trace_tree(rep, 8.0);
                std::map<std::string, double> words;
                for (const auto& c : spec.classes) words[c.word] = c.length;
                for (const auto& e : tree.entries) {
                  const auto it =
                      words.find(canonical_cyclic(christoffel(e.slope)));
                  ok = ok && it != words.end() &&
                       std::abs(it->second - e.length) <= 1e-9;
                  ++tree_total;
                }
              }
              detail = fmt("%.0f slope checks, %.0f simple classes matched",
                           double(slopes), double(tree_total));
              return ok;
            });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
