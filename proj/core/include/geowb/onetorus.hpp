#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "geowb/holonomy.hpp"
#include "geowb/hyptrig.hpp"
#include "geowb/slope.hpp"
#include "geowb/trace_tree.hpp"

namespace geowb {

// Sharp upper bound for the systole of a one-holed torus with boundary
// length b: 2 arccosh(cosh(b/6) + 1/2), attained at the half-twist maximizer
// with three systoles. The equivalent closed-form cubic root is evaluated as
// a cross-check; the two forms must agree within 1e-10 or the call throws.
// Throws std::domain_error for b < 0.
Length max_systole_bound(Length b);

// The intermediate cubic root x3 = cosh(bound/2) in its radical form
//   x3 = u^{1/3}/2 + u^{-1/3}/2 + 1/2,  u = -1 + 2C + 2 sqrt(C^2 - C),
// with C = cosh^2(b/4). Exposed for direct comparison against the cosh form.
double max_systole_bound_cubic_root(Length b);

struct McShaneResult {
  double sum = 0.0;         // partial sum of 1/(1 + e^length) up to cutoff
  double tail_bound = 0.0;  // rigorous-style bound on the discarded tail
  std::int64_t count = 0;   // number of geodesics summed
};

// Partial McShane sum over the simple spectrum of a cusped torus, with a
// tail bound derived from the observed quadratic growth of the count:
// tail <= 8 * (count/L^2) * (L+1) * e^{-L}. Throws std::invalid_argument if
// the representation is not a torus preset with a cusp.
McShaneResult mcshane_sum(const HolonomyRep& rep, Length cutoff);

// Number of unoriented simple closed geodesics of length <= cutoff.
std::int64_t count_simple(const HolonomyRep& rep, Length cutoff);

struct GrowthFit {
  double exponent = 0.0;     // least-squares slope of log N against log L
  double coefficient = 0.0;  // exp(intercept): N(L) ~ coefficient * L^exponent
};

// Fit over the largest decade [Lmax/10, Lmax] of the supplied (L, N(L))
// samples, dropping N = 0 points. Throws std::invalid_argument when fewer
// than 4 usable points remain.
GrowthFit growth_fit(const std::vector<std::pair<Length, std::int64_t>>& counts);

// Stable norm on H_1 of the torus: the homogeneous extension of
// ||(p,q)|| = length of the slope (p,q). Directions are approximated by the
// best primitive integer vector with coordinates bounded by cap (continued
// fractions). stable_norm({0,0}) = 0.
double stable_norm(const TraceTriple& seed, double vx, double vy,
                   std::int64_t cap = 200000);

struct NormBallSample {
  double theta = 0.0;   // direction in [0, pi)
  double radius = 0.0;  // 1 / ||(cos theta, sin theta)||
};

struct NormBall {
  double area = 0.0;
  std::vector<NormBallSample> samples;
  // Counts here are of unoriented primitive classes; doubling for oriented
  // classes scales the asymptotic constant by this factor.
  int orientation_factor = 2;
};

// Polygonal approximation of the unit ball {v : ||v|| <= 1}, sampled at
// `resolution` directions over a half circle and completed by central
// symmetry. Throws std::invalid_argument if resolution < 16.
NormBall stable_norm_ball(const TraceTriple& seed, int resolution);
NormBall stable_norm_ball(const HolonomyRep& rep, int resolution);

struct MultiplicityHistogram {
  // (representative length, count) per bucket, in increasing length order.
  std::vector<std::pair<Length, int>> buckets;
  int max_multiplicity = 0;
};

// Buckets spectrum lengths with tolerance 1e-9 * max(1, length).
MultiplicityHistogram multiplicity_histogram(const SimpleSpectrum& spectrum);

}  // namespace geowb
