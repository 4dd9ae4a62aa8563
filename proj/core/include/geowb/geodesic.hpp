#pragma once

// Complete geodesic lines of the upper half-plane, given by their boundary
// endpoints in projective coordinates (u : v) on RP^1 (v = 0 is infinity).
// Provides line-line distance, perpendicular feet, reflections, and the
// side (left/right) of a point relative to an oriented line.

#include <complex>

#include "geowb/isometry.hpp"

namespace geowb {

struct ProjPoint {
  double u = 0.0, v = 1.0;

  static ProjPoint infinity() { return {1.0, 0.0}; }
  static ProjPoint finite(double x) { return {x, 1.0}; }

  bool is_infinite() const;
  double value() const;  // u/v; caller checks is_infinite first
};

// Oriented geodesic line from e0 to e1 (distinct boundary points).
struct GeodesicLine {
  ProjPoint e0, e1;

  GeodesicLine reversed() const { return {e1, e0}; }
};

ProjPoint apply(const Isometry& g, const ProjPoint& p);
GeodesicLine apply(const Isometry& g, const GeodesicLine& l);

// Moebius map sending l.e0 -> 0, l.e1 -> infinity, upper half-plane to
// itself (determinant normalized to 1).
Isometry normalizer_to_vertical(const GeodesicLine& l);

// Distance between two geodesic lines. Returns 0 when they intersect or are
// asymptotic; crossing is reported through *crossing when non-null.
double line_distance(const GeodesicLine& l1, const GeodesicLine& l2,
                     bool* crossing = nullptr);

// Feet of the common perpendicular between two disjoint lines:
// foot1 on l1, foot2 on l2. Throws std::domain_error when the lines cross
// or share an endpoint.
void common_perp_feet(const GeodesicLine& l1, const GeodesicLine& l2,
                      std::complex<double>& foot1, std::complex<double>& foot2);

// Intersection point of two crossing lines. Throws std::domain_error when
// they do not cross.
std::complex<double> line_intersection(const GeodesicLine& l1,
                                       const GeodesicLine& l2);

// Product of the reflections in l1 and l2 (in that order: reflect in l2
// first, then l1), a determinant-1 isometry. Hyperbolic with translation
// length 2*d(l1,l2) when the lines are disjoint, parabolic when asymptotic.
Isometry reflection_product(const GeodesicLine& l1, const GeodesicLine& l2);

// Side of z relative to the oriented line: -1 = left, +1 = right, 0 = on.
// For the vertical axis oriented 0 -> infinity, the left side is Re z < 0.
int side_of(const GeodesicLine& l, std::complex<double> z);

// Point of l closest to z (foot of the perpendicular from z).
std::complex<double> closest_point(const GeodesicLine& l, std::complex<double> z);

// Hyperbolic distance from z to the line.
double line_point_distance(const GeodesicLine& l, std::complex<double> z);

// Point at signed arclength s along the oriented line from its "origin"
// (the point mapped from i by the inverse normalizer).
std::complex<double> point_along(const GeodesicLine& l, double s);

}  // namespace geowb
