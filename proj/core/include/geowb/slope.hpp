#pragma once

// Slopes of simple closed curves on the one-holed torus.
//
// A slope is a primitive homology class p[a] + q[b] up to sign; canonical
// representatives have q > 0, or q = 0 and p = 1. Slopes with p,q > 0 live
// in the Stern-Brocot tree over the basis pair ((1,0),(0,1)) with mediant
// children; slopes with p < 0 live in the mirror tree over ((1,0),(0,-1)).
// Traces follow the mediant structure by the Vieta recursion
//   tr(W1 W2) = tr(W1) tr(W2) - tr(W1 W2^-1).

#include <cstdint>
#include <string>

#include "geowb/hyptrig.hpp"

namespace geowb {

struct Slope {
  std::int64_t p = 1;
  std::int64_t q = 0;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;
};

// Canonical unoriented representative. Throws std::invalid_argument for
// (0,0) or non-coprime input.
Slope canonical_slope(std::int64_t p, std::int64_t q);

// Traces of the generators A, B and of the product AB.
struct TraceTriple {
  double x = 3.0;
  double y = 3.0;
  double z = 3.0;
};

// Boundary trace of the triple: x^2 + y^2 + z^2 - xyz - 2, which equals
// tr[A,B] and -2 cosh(b/2) for a surface with boundary length b.
double boundary_trace(const TraceTriple& t);

// Sign-canonical form with x, y, z all positive (flips compatible sign
// pairs; valid hyperbolic triples have xyz > 0). Throws std::domain_error
// if a generator trace is elliptic (|t| < 2) and std::invalid_argument if
// the triple cannot be made positive or does not satisfy
// boundary_trace <= -2 (within 1e-9).
TraceTriple canonical_triple(const TraceTriple& t);

// Trace of the primitive class of a slope, by walking the Farey path from
// the basis triple. Overflows to +inf for lengths beyond ~700; use
// slope_log_trace for deep slopes. Throws std::invalid_argument if
// |p| + |q| exceeds 10^7 (the walk is subtractive).
double slope_trace(const TraceTriple& seed, const Slope& s);

// log of the slope trace, computed entirely in log space.
double slope_log_trace(const TraceTriple& seed, const Slope& s);

// Geodesic length 2 arccosh(trace/2) of the slope, stable for all sizes.
Length slope_length(const TraceTriple& seed, const Slope& s);

// Length from a log trace (2 arccosh(e^lambda / 2)).
Length log_trace_to_length(double log_trace);

// Christoffel word of the slope over letters a/b (uppercase = inverse):
// W(1,0) = "a", W(0,1) = "b", W(0,-1) = "B", and mediants concatenate,
// W(s1 + s2) = W(s1) W(s2). The word has |p| + |q| letters.
std::string christoffel(const Slope& s);

}  // namespace geowb
