#pragma once

// Scalar hyperbolic trigonometry: collar widths, right-angled polygon
// relations for pairs of pants, and the trace <-> length dictionary.
//
// Lengths are nonnegative doubles; 0 encodes the cusp limit wherever a
// boundary length is accepted.

namespace geowb {

using Length = double;

// Half-width of the embedded collar around a closed geodesic of length l:
// w = arcsinh(1 / sinh(l/2)). Strictly decreasing in l. Throws
// std::domain_error for l <= 0.
Length collar_width(Length l);

// Perpendicular self-arc of the cuff delta in the pants (delta, delta, gamma):
// cosh c = (cosh(l_gamma/2) + cosh^2(l_delta/2)) / sinh^2(l_delta/2).
// l_gamma = 0 is the cusp limit. Throws std::domain_error for
// l_delta <= 0 or l_gamma < 0.
Length hexagon_perp(Length l_gamma, Length l_delta);

// Same perpendicular via the right-angled pentagon relation:
// cosh^2(c/2) = (cosh^2(l_gamma/4) + cosh^2(l_delta/2) - 1)
//             / (cosh^2(l_delta/2) - 1).
// Agrees with hexagon_perp to ~1e-12 relative (double-angle identity).
Length pentagon_perp(Length l_gamma, Length l_delta);

// Length of the dual curve crossing delta once when the pasting offset puts
// the seam feet half a cuff apart: cosh(l'/2) = cosh(c/2) * cosh(l_delta/4).
// Throws std::domain_error for c <= 0 or l_delta <= 0.
Length quad_opposite(Length c, Length l_delta);

// Geodesic length of a hyperbolic isometry with trace t:
// l = 2*arccosh(|t|/2). |t| within tol_trace of 2 returns 0 (parabolic);
// |t| < 2 - tol_trace throws std::domain_error (elliptic).
Length trace_to_length(double t);

// Inverse dictionary: t = 2*cosh(l/2) for l >= 0.
double length_to_trace(Length l);

}  // namespace geowb
