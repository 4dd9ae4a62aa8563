#pragma once

// SVG plots of simple closed geodesics on a one-holed torus, folded into a
// fundamental polygon.
//
// The polygon is the Dirichlet domain of the holonomy group about a fixed
// center: the set of points at least as close to the center as to any of
// its translates under reduced words of length <= wall_depth. Folding a
// point applies wall elements while the distance to the center strictly
// decreases, so every folded point satisfies all wall inequalities within
// 1e-9 -- comfortably inside the documented 1e-6 containment contract for
// emitted coordinates.
//
// The picture is drawn in the unit-disk chart centered at the Dirichlet
// center (Cayley map z -> (z - z0)/(z - conj z0), center -> 0; the SVG
// y-axis points down, so disk coordinates are emitted as (re, -im)). All
// coordinates are written in shortest round-trip decimal form, so a test
// can parse them back exactly, map them to the half-plane with from_disk,
// and verify the containment contract on the emitted numbers.
//
// Curves: one SVG path per slope in plot_slope_set(bound), the primitive
// classes (p, q) with 0 <= p, q <= bound. Doubling samples_per_unit only
// densifies the sampling; the number of paths stays the number of slopes
// (bound 1 on the modular torus: exactly (1,0), (0,1), (1,1)).

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "geowb/geodesic.hpp"
#include "geowb/holonomy.hpp"
#include "geowb/slope.hpp"

namespace geowb {

// Dirichlet domain of a one-holed-torus holonomy group about center i.
// The domain of the full group is unbounded (funnel past the boundary
// geodesic), so boundary walls are sampled within a finite reach.
class DirichletDomain {
 public:
  // Walls from all nonempty reduced words of length <= wall_depth over the
  // two generators. Throws std::invalid_argument unless rep.preset is
  // "torus" or wall_depth is outside 1..8.
  explicit DirichletDomain(const HolonomyRep& rep, int wall_depth = 4);

  std::complex<double> center() const { return center_; }
  std::size_t wall_count() const { return walls_.size(); }

  // Apply wall elements while the distance to the center decreases by more
  // than 1e-9. The result satisfies every wall inequality within 1e-9 and
  // is a group translate of z (same point of the quotient surface).
  // Throws std::runtime_error if folding fails to settle (not expected).
  std::complex<double> fold(std::complex<double> z) const;

  // max over walls w of d(z, center) - d(z, w(center)): <= 0 inside the
  // polygon, > 0 outside. The containment contract is violation <= 1e-6.
  double violation(std::complex<double> z) const;

  // Unit-disk chart about the center and its inverse.
  std::complex<double> to_disk(std::complex<double> z) const;
  std::complex<double> from_disk(std::complex<double> w) const;

  // Polygon boundary for drawing: each wall bisector sampled over
  // arclength [-reach, reach] about its closest approach to the center,
  // keeping maximal runs with violation <= 1e-7 (at least two points).
  // Half-plane coordinates.
  std::vector<std::vector<std::complex<double>>> boundary_polylines(
      double reach, int samples_per_unit) const;

 private:
  struct Wall {
    Isometry pullback;            // inverse of the wall element
    std::complex<double> point;   // wall element applied to the center
    GeodesicLine bisector;        // equidistant line between center and point
  };

  std::complex<double> center_;
  std::vector<Wall> walls_;
};

// Primitive slopes (p, q) with 0 <= p, q <= bound, in row order (p major).
// bound 0 is empty; bound 1 is (0,1), (1,0), (1,1). Throws
// std::invalid_argument if bound < 0 or bound > 64.
std::vector<Slope> plot_slope_set(int bound);

struct PlotConfig {
  int slope_bound = 1;        // slopes from plot_slope_set(slope_bound)
  int samples_per_unit = 40;  // samples per unit arclength, >= 2
  int wall_depth = 4;         // Dirichlet wall word length
  double wall_reach = 6.0;    // arclength reach when sampling walls
  std::string metadata;       // emitted as a <desc> element when nonempty
};

struct PlotStats {
  int curves = 0;              // geodesic paths emitted (= slope count)
  int pieces = 0;              // connected polyline pieces across all curves
  std::size_t points = 0;      // emitted geodesic points
  double max_violation = 0.0;  // max Dirichlet violation over emitted points
};

// Render the folded simple closed geodesics of the slope set as SVG.
// One <path class="geodesic"> per slope; the polygon boundary is drawn as
// <polyline class="wall"> elements. Throws std::invalid_argument for a
// non-torus representation or out-of-range config values.
std::string plot_geodesics_svg(const HolonomyRep& rep,
                               const PlotConfig& config,
                               PlotStats* stats = nullptr);

}  // namespace geowb
