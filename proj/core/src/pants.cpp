#include "geowb/pants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "geowb/constants.hpp"

namespace geowb {

namespace {

double tanh_sq_quarter(Length l) {
  const double th = std::tanh(l / 4.0);
  return th * th;
}

GeodesicLine seam20_at(double t, double rho0) {
  if (rho0 == 0.0) return {ProjPoint::finite(t), ProjPoint::infinity()};
  return {ProjPoint::finite(t), ProjPoint::finite(t / rho0)};
}

// Solve d(S12, S20(t)) = l2/2 for t > 1. The distance grows from 0 (at the
// shared-endpoint limit t = 1) and is monotone in t.
double solve_t(const GeodesicLine& s12, double rho0, Length l2) {
  if (l2 == 0.0) return 1.0;
  const double target = l2 / 2.0;
  double lo = 1.0, hi = 2.0;
  while (line_distance(s12, seam20_at(hi, rho0)) < target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("build_pants: seam bracket failed");
  }
  for (int i = 0; i < 200 && (hi - lo) > 1e-16 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (line_distance(s12, seam20_at(mid, rho0)) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PantsGeometry build_pants(Length l0, Length l1, Length l2) {
  if (l0 < 0.0 || l1 < 0.0 || l2 < 0.0)
    throw std::domain_error("build_pants: cuff lengths must be nonnegative");

  PantsGeometry pg;
  const double p = tanh_sq_quarter(l1);
  const double rho0 = tanh_sq_quarter(l0);

  pg.seam[0] = {ProjPoint::finite(0.0), ProjPoint::infinity()};
  pg.seam[1] = {ProjPoint::finite(p), ProjPoint::finite(1.0)};
  const double t = solve_t(pg.seam[1], rho0, l2);
  pg.seam[2] = seam20_at(t, rho0);

  // Witness: a point of the S01 hexagon side, strictly between the feet of
  // the cuff-0 and cuff-1 axes on S01 (y in (sqrt(p), t/sqrt(rho0))).
  {
    const double lo = std::sqrt(p);                     // 0 when cuff 1 is a cusp
    const double hi = rho0 == 0.0 ? std::numeric_limits<double>::infinity()
                                  : t / std::sqrt(rho0);
    double y;
    if (lo == 0.0 && std::isinf(hi)) y = 1.0;
    else if (lo == 0.0) y = hi / 2.0;
    else if (std::isinf(hi)) y = 2.0 * lo;
    else y = std::sqrt(lo * hi);
    pg.witness = {0.0, y};
  }

  const Length ls[3] = {l0, l1, l2};
  for (int k = 0; k < 3; ++k) {
    CuffSlot& cs = pg.cuff[k];
    cs.length = ls[k];
    cs.cusp = ls[k] == 0.0;
    const GeodesicLine& prev = pg.seam[(k + 2) % 3];  // seam toward slot k-1
    const GeodesicLine& next = pg.seam[k];            // seam toward slot k+1
    cs.holonomy = reflection_product(prev, next);
    if (cs.cusp) continue;

    const AxisEnds e = axis_ends(cs.holonomy);
    const GeodesicLine ax{{e.ru, e.rv}, {e.au, e.av}};
    // Orientation convention: the pants interior lies on the right of each
    // oriented cuff axis, which is what makes X0*X1*X2 telescope to the
    // identity. The witness sits in the interior, so this is checkable.
    if (side_of(ax, pg.witness) != 1)
      throw std::runtime_error("build_pants: cuff orientation check failed");
    cs.axis = ax;
    cs.foot_next = line_intersection(ax, next);
    cs.foot_prev = line_intersection(ax, prev);
  }

  const Isometry prod =
      pg.cuff[0].holonomy * pg.cuff[1].holonomy * pg.cuff[2].holonomy;
  pg.relation_residual = dist_to_identity(prod);
  if (pg.relation_residual > tol_relator)
    throw std::runtime_error("build_pants: cuff relation residual too large");

  // Cuff traces must match the requested lengths.
  for (int k = 0; k < 3; ++k) {
    const double want = length_to_trace(ls[k]);
    if (std::fabs(std::fabs(pg.cuff[k].holonomy.trace()) - want) > 1e-7)
      throw std::runtime_error("build_pants: cuff trace mismatch");
  }
  return pg;
}

}  // namespace geowb
