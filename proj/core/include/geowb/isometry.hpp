#pragma once

// 2x2 real matrices of determinant 1 acting on the upper half-plane.
// Products renormalize by sqrt(det) every renorm_interval accumulated
// multiplications, keeping |det - 1| <= tol_det through long searches.

#include <complex>
#include <cstdint>

#include "geowb/hyptrig.hpp"

namespace geowb {

enum class IsomClass { Identity, Elliptic, Parabolic, Hyperbolic };

struct Isometry {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  // Products since the last renormalization; drives the renorm policy.
  std::int32_t age = 0;

  static Isometry identity() { return {}; }

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }

  Isometry inverse() const { return Isometry{d, -b, -c, a, age}; }

  // Moebius action on a point of the upper half-plane.
  std::complex<double> apply(std::complex<double> z) const;

  // Action on a boundary point given projectively as (u : v).
  void apply_proj(double u, double v, double& out_u, double& out_v) const;

  // Divide by sqrt(det); resets the age counter.
  void renormalize();

  // Frobenius norm; cheap surrogate wherever any submultiplicative norm works.
  double frobenius() const;
};

// Product with the renormalization policy applied.
Isometry operator*(const Isometry& x, const Isometry& y);

IsomClass classify(const Isometry& g);

// Translation length of a hyperbolic isometry; 0 for parabolic/identity,
// throws std::domain_error for elliptic (via trace_to_length).
Length translation_length(const Isometry& g);

// Fixed points of a hyperbolic isometry on the boundary circle, projectively:
// repelling (ru : rv), attracting (au : av). Orientation of the axis is
// repelling -> attracting, the direction of translation.
// Throws std::domain_error unless classify(g) == Hyperbolic.
struct AxisEnds {
  double ru, rv;  // repelling
  double au, av;  // attracting
};
AxisEnds axis_ends(const Isometry& g);

// Exact spectral (operator) 2-norm of the 2x2 matrix g - s*I, minimized over
// sign s in {+1,-1}: the PSL-aware distance to the identity.
double dist_to_identity(const Isometry& g);

// Hyperbolic distance between two points of the upper half-plane.
double hyp_dist(std::complex<double> z, std::complex<double> w);

}  // namespace geowb
