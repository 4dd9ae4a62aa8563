#include "geowb/slope.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "geowb/constants.hpp"

namespace geowb {

namespace {

constexpr std::int64_t kWalkCap = 10'000'000;

// Farey-walk coordinates of the canonical slope: the target is
// alpha*s1 + beta*s2 over the tree basis; tree 1 (q >= 0, p >= 0) has
// basis words (a, b), tree 2 (p < 0) has basis words (a, B).
struct WalkTarget {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  bool mirror = false;  // tree 2
};

WalkTarget walk_target(const Slope& s) {
  if (s.q == 0) return {1, 0, false};
  if (s.p == 0) return {0, 1, false};
  if (s.p > 0) return {s.p, s.q, false};
  return {-s.p, s.q, true};
}

}  // namespace

Slope canonical_slope(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0)
    throw std::invalid_argument("canonical_slope: (0,0) is not a slope");
  if (std::gcd(std::llabs(p), std::llabs(q)) != 1)
    throw std::invalid_argument("canonical_slope: slope must be primitive");
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

double boundary_trace(const TraceTriple& t) {
  return t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z - 2.0;
}

TraceTriple canonical_triple(const TraceTriple& t) {
  for (const double v : {t.x, t.y, t.z}) {
    if (!std::isfinite(v))
      throw std::invalid_argument("canonical_triple: non-finite trace");
    if (std::fabs(v) < 2.0 - tol_trace)
      throw std::domain_error("canonical_triple: elliptic generator trace");
  }
  if (boundary_trace(t) > -2.0 + 1e-9)
    throw std::invalid_argument(
        "canonical_triple: triple is not a hyperbolic one-holed torus");
  TraceTriple c = t;
  // Flipping the SL(2) lift of one generator flips two of the three
  // traces; xyz > 0 guarantees an all-positive pattern exists.
  if (c.x < 0 && c.z < 0) {
    c.x = -c.x;
    c.z = -c.z;
  }
  if (c.y < 0 && c.z < 0) {
    c.y = -c.y;
    c.z = -c.z;
  }
  if (c.x < 0 && c.y < 0) {
    c.x = -c.x;
    c.y = -c.y;
  }
  if (c.x <= 0 || c.y <= 0 || c.z <= 0)
    throw std::invalid_argument("canonical_triple: traces not sign-consistent");
  return c;
}

double slope_trace(const TraceTriple& seed, const Slope& s) {
  const Slope c = canonical_slope(s.p, s.q);
  if (std::llabs(c.p) + std::llabs(c.q) > kWalkCap)
    throw std::invalid_argument("slope_trace: slope too deep; use log form");
  const TraceTriple k = canonical_triple(seed);
  WalkTarget t = walk_target(c);
  double u = k.x;
  double v = k.y;
  double w = t.mirror ? k.x * k.y - k.z : k.z;
  if (t.alpha == 1 && t.beta == 0) return u;
  if (t.alpha == 0 && t.beta == 1) return v;
  while (!(t.alpha == 1 && t.beta == 1)) {
    if (t.alpha > t.beta) {
      t.alpha -= t.beta;
      const double nw = u * w - v;
      v = w;
      w = nw;
    } else {
      t.beta -= t.alpha;
      const double nw = w * v - u;
      u = w;
      w = nw;
    }
  }
  return w;
}

double slope_log_trace(const TraceTriple& seed, const Slope& s) {
  const Slope c = canonical_slope(s.p, s.q);
  if (std::llabs(c.p) + std::llabs(c.q) > kWalkCap)
    throw std::invalid_argument("slope_log_trace: slope too deep");
  const TraceTriple k = canonical_triple(seed);
  WalkTarget t = walk_target(c);
  double u = std::log(k.x);
  double v = std::log(k.y);
  double w = std::log(t.mirror ? k.x * k.y - k.z : k.z);
  if (t.alpha == 1 && t.beta == 0) return u;
  if (t.alpha == 0 && t.beta == 1) return v;
  // log(e^(u+w) - e^v) = u + w + log1p(-e^(v-u-w)); the subtracted term
  // is always the smaller Vieta root, so the argument stays in (0,1).
  while (!(t.alpha == 1 && t.beta == 1)) {
    if (t.alpha > t.beta) {
      t.alpha -= t.beta;
      const double nw = u + w + std::log1p(-std::exp(v - u - w));
      v = w;
      w = nw;
    } else {
      t.beta -= t.alpha;
      const double nw = w + v + std::log1p(-std::exp(u - w - v));
      u = w;
      w = nw;
    }
  }
  return w;
}

Length log_trace_to_length(double log_trace) {
  if (log_trace < std::log(2.0) - 1e-12)
    throw std::domain_error("log_trace_to_length: trace below 2");
  if (log_trace < 5.0) return 2.0 * std::acosh(std::exp(log_trace) / 2.0);
  const double r = std::sqrt(std::max(0.0, 1.0 - 4.0 * std::exp(-2.0 * log_trace)));
  return 2.0 * (log_trace - std::log(2.0) + std::log1p(r));
}

Length slope_length(const TraceTriple& seed, const Slope& s) {
  return log_trace_to_length(slope_log_trace(seed, s));
}

std::string christoffel(const Slope& s) {
  const Slope c = canonical_slope(s.p, s.q);
  if (std::llabs(c.p) + std::llabs(c.q) > 1'000'000)
    throw std::invalid_argument("christoffel: word would exceed 10^6 letters");
  WalkTarget t = walk_target(c);
  std::string w1 = "a";
  std::string w2 = t.mirror ? "B" : "b";
  if (t.alpha == 1 && t.beta == 0) return w1;
  if (t.alpha == 0 && t.beta == 1) return w2;
  while (!(t.alpha == 1 && t.beta == 1)) {
    if (t.alpha > t.beta) {
      t.alpha -= t.beta;
      w2 = w1 + w2;  // right endpoint becomes the mediant
    } else {
      t.beta -= t.alpha;
      w1 = w1 + w2;  // left endpoint becomes the mediant
    }
  }
  return w1 + w2;
}

}  // namespace geowb
