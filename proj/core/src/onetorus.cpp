#include "geowb/onetorus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geowb/constants.hpp"

namespace geowb {

double max_systole_bound_cubic_root(Length b) {
  if (b < 0.0) throw std::domain_error("max_systole_bound: negative boundary length");
  const double C = std::pow(std::cosh(b / 4.0), 2);
  const double u = -1.0 + 2.0 * C + 2.0 * std::sqrt(std::max(0.0, C * C - C));
  const double cbrt_u = std::cbrt(u);
  return 0.5 * cbrt_u + 0.5 / cbrt_u + 0.5;
}

Length max_systole_bound(Length b) {
  if (b < 0.0) throw std::domain_error("max_systole_bound: negative boundary length");
  const double direct = std::cosh(b / 6.0) + 0.5;
  const double cubic = max_systole_bound_cubic_root(b);
  if (std::abs(direct - cubic) > 1e-10 * std::max(1.0, direct))
    throw std::runtime_error("max_systole_bound: closed forms disagree");
  return 2.0 * std::acosh(direct);
}

McShaneResult mcshane_sum(const HolonomyRep& rep, Length cutoff) {
  if (rep.preset != "torus" || rep.boundary_lengths.size() != 1 ||
      rep.boundary_lengths[0] != 0.0)
    throw std::invalid_argument("mcshane_sum: identity requires a cusped torus");

  const SimpleSpectrum spec = trace_tree(rep, cutoff);
  McShaneResult out;
  out.count = static_cast<std::int64_t>(spec.entries.size());
  // Sum smallest terms (longest geodesics) first for accuracy.
  for (auto it = spec.entries.rbegin(); it != spec.entries.rend(); ++it) {
    const double e = std::exp(-it->length);
    out.sum += e / (1.0 + e);
  }
  // The count grows quadratically; bound the tail by the integral of
  // t e^{-t} against the fitted quadratic envelope, with a safety factor.
  if (cutoff > 0.0) {
    const double c_fit =
        static_cast<double>(std::max<std::int64_t>(out.count, 1)) /
        (cutoff * cutoff);
    out.tail_bound = 8.0 * c_fit * (cutoff + 1.0) * std::exp(-cutoff);
  } else {
    out.tail_bound = 1.0;
  }
  return out;
}

std::int64_t count_simple(const HolonomyRep& rep, Length cutoff) {
  return static_cast<std::int64_t>(trace_tree(rep, cutoff).entries.size());
}

GrowthFit growth_fit(const std::vector<std::pair<Length, std::int64_t>>& counts) {
  Length max_l = 0.0;
  for (const auto& [l, n] : counts) max_l = std::max(max_l, l);

  std::vector<std::pair<double, double>> pts;  // (log L, log N)
  for (const auto& [l, n] : counts)
    if (n >= 1 && l >= max_l / 10.0 && l > 0.0)
      pts.emplace_back(std::log(l), std::log(static_cast<double>(n)));
  if (pts.size() < 4)
    throw std::invalid_argument("growth_fit: need at least 4 usable points in the top decade");

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  const double denom = n * sxx - sx * sx;
  if (denom <= 0.0) throw std::invalid_argument("growth_fit: degenerate sample");
  GrowthFit fit;
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.coefficient = std::exp((sy - fit.exponent * sx) / n);
  return fit;
}

namespace {

// Best primitive integer direction approximating t = vx/vy (vy > 0) with
// coordinates bounded by cap, via continued-fraction convergents.
Slope rational_direction(double vx, double vy, std::int64_t cap) {
  if (vy == 0.0) return Slope{1, 0};
  if (vx == 0.0) return Slope{0, 1};
  double x = std::abs(vx / vy);
  const bool neg = vx < 0.0;
  std::int64_t h2 = 0, h1 = 1;  // numerators  (h1/k1 = current convergent)
  std::int64_t k2 = 1, k1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fa = std::floor(x);
    if (fa > 1e17) break;
    const std::int64_t a = static_cast<std::int64_t>(fa);
    const std::int64_t h = a * h1 + h2;
    const std::int64_t k = a * k1 + k2;
    if (h > cap || k > cap) {
      if (k1 == 0) {
        // First convergent already exceeds cap: clamp the quotient.
        return canonical_slope(neg ? -cap : cap, 1);
      }
      break;
    }
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    const double frac = x - fa;
    if (frac < 1e-14) break;
    x = 1.0 / frac;
  }
  if (k1 == 0) return Slope{1, 0};
  return canonical_slope(neg ? -h1 : h1, k1);
}

}  // namespace

double stable_norm(const TraceTriple& seed, double vx, double vy,
                   std::int64_t cap) {
  const double mag = std::hypot(vx, vy);
  if (mag == 0.0) return 0.0;
  if (vy < 0.0 || (vy == 0.0 && vx < 0.0)) {
    vx = -vx;
    vy = -vy;
  }
  const Slope s = rational_direction(vx, vy, cap);
  const double smag = std::hypot(static_cast<double>(s.p), static_cast<double>(s.q));
  return mag * slope_length(seed, s) / smag;
}

NormBall stable_norm_ball(const TraceTriple& seed, int resolution) {
  if (resolution < 16)
    throw std::invalid_argument("stable_norm_ball: resolution must be at least 16");
  NormBall ball;
  ball.samples.reserve(static_cast<std::size_t>(resolution));
  const double pi = std::acos(-1.0);
  for (int j = 0; j < resolution; ++j) {
    const double theta = pi * (j + 0.5) / resolution;
    const double norm = stable_norm(seed, std::cos(theta), std::sin(theta));
    ball.samples.push_back(NormBallSample{theta, 1.0 / norm});
  }
  // Shoelace area of the centrally symmetric 2*resolution-gon.
  double area2 = 0.0;  // twice the area of the upper half fan
  for (int j = 0; j + 1 < resolution; ++j) {
    const auto& a = ball.samples[static_cast<std::size_t>(j)];
    const auto& b = ball.samples[static_cast<std::size_t>(j + 1)];
    area2 += a.radius * b.radius * std::sin(b.theta - a.theta);
  }
  // Closing wedge from the last sample to the mirror of the first.
  const auto& first = ball.samples.front();
  const auto& last = ball.samples.back();
  area2 += last.radius * first.radius * std::sin(pi + first.theta - last.theta);
  ball.area = area2;  // doubling the half fan cancels the shoelace 1/2
  return ball;
}

NormBall stable_norm_ball(const HolonomyRep& rep, int resolution) {
  return stable_norm_ball(torus_traces(rep), resolution);
}

MultiplicityHistogram multiplicity_histogram(const SimpleSpectrum& spectrum) {
  MultiplicityHistogram hist;
  std::size_t i = 0;
  const auto& e = spectrum.entries;
  while (i < e.size()) {
    const Length rep_len = e[i].length;
    std::size_t j = i;
    while (j < e.size() &&
           e[j].length - rep_len <= tol_bucket * std::max(1.0, rep_len))
      ++j;
    const int count = static_cast<int>(j - i);
    hist.buckets.emplace_back(rep_len, count);
    hist.max_multiplicity = std::max(hist.max_multiplicity, count);
    i = j;
  }
  return hist;
}

}  // namespace geowb
