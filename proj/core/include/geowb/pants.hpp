#pragma once

// Canonical hyperbolic pair of pants from three cuff lengths (0 = cusp).
//
// Placement in the upper half-plane: the three seams (mutual perpendiculars
// between cuffs) are
//   seam[0] = S01 = (0, infinity),
//   seam[1] = S12 = (p, 1)        with p = tanh^2(l1/4),
//   seam[2] = S20 = (t, t/rho0)   with rho0 = tanh^2(l0/4), t in (1, inf)
// where t solves d(S12, S20) = l2/2 (t = 1 exactly when l2 = 0; S20 is the
// vertical line x = t when l0 = 0). Cuff k's axis is the common
// perpendicular of its two adjacent seams; its holonomy is the product of
// the reflections in those seams, so X0*X1*X2 = Id holds by construction.

#include <complex>

#include "geowb/geodesic.hpp"
#include "geowb/hyptrig.hpp"
#include "geowb/isometry.hpp"

namespace geowb {

struct CuffSlot {
  Length length = 0.0;
  bool cusp = true;
  // Translation along the cuff axis with the pants on the RIGHT of the
  // oriented axis (repelling -> attracting). Parabolic for cusps.
  Isometry holonomy;
  GeodesicLine axis;                 // oriented; meaningless for cusps
  std::complex<double> foot_next;    // axis ^ seam toward the next slot
  std::complex<double> foot_prev;    // axis ^ seam toward the previous slot
};

struct PantsGeometry {
  CuffSlot cuff[3];
  GeodesicLine seam[3];              // seam[k] joins cuff k and cuff k+1
  std::complex<double> witness;      // interior point of a hexagon side
  double relation_residual = 0.0;    // PSL distance of X0*X1*X2 from identity
};

// Throws std::domain_error for negative lengths.
PantsGeometry build_pants(Length l0, Length l1, Length l2);

}  // namespace geowb
