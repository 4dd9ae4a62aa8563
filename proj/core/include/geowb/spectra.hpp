#pragma once

#include <string>
#include <vector>

#include "geowb/enumerate.hpp"
#include "geowb/holonomy.hpp"
#include "geowb/hyptrig.hpp"

namespace geowb {

struct SystoleResult {
  Length length = 0.0;  // +infinity when inconclusive
  std::vector<GeodesicClass> witnesses;  // minimal bucket, tol_bucket relative
  Length cutoff_used = 0.0;
  std::string status;  // "ok" | "inconclusive"
};

// Shortest closed geodesic with witnesses, by adaptive enumeration: start at
// systole_search_cutoff0() and grow the cutoff by x1.5 until the spectrum is
// nonempty; give up past search_cap with status "inconclusive".
SystoleResult systole(const HolonomyRep& rep, Length search_cap = 64.0);

struct HuberPoint {
  Length l = 0.0;
  long long n_all = 0;  // primitive classes of length <= l
  double scaled = 0.0;  // n_all * l * exp(-l), the quantity that flattens
};

struct HuberReport {
  std::vector<HuberPoint> grid;
  double slope = 0.0;        // least-squares d(log N)/dL over the top half
  double drift = 0.0;        // relative spread of `scaled` over the top half
  std::string enumeration;   // status of the underlying enumeration
  std::string status;        // "converging" iff slope in [0.85, 1.15]
};

// Counts primitive classes at n_points evenly spaced cutoffs in
// [l_min, l_max], from one enumeration at l_max. Throws
// std::invalid_argument when the grid has fewer than 4 points, bounds are
// out of order, or fewer than 4 top-half points have nonzero counts.
HuberReport huber_check(const HolonomyRep& rep, Length l_min, Length l_max,
                        int n_points);

struct BersCurve {
  std::string word;
  Length length = 0.0;
};

// Upper-bound report for the Bers constant of the underlying surface: the
// defining pants decomposition is one explicit decomposition, so its longest
// curve bounds B(S) from above; `improved_l_p` additionally minimizes over
// alternative decompositions whose validity is certified combinatorially
// (free for the one-holed torus where every simple slope is a
// decomposition; no certified moves are available for the other presets).
struct BersReport {
  std::vector<BersCurve> curves;  // the defining decomposition
  Length l_p = 0.0;               // max over defining curves
  Length improved_l_p = 0.0;      // after certified replacement moves
  std::string improved_word;      // nonempty when a move improved l_p
  long long flips_tried = 0;
  std::string status;  // always "upper_bound_only"
};

// Throws std::runtime_error if the decomposition curve count disagrees with
// 3g - 3 + n or a curve word's length disagrees with its FN length.
BersReport bers_upper(const HolonomyRep& rep);

// 32x^5 - 32x^4 - 24x^3 + 24x^2 - 1, the minimal polynomial whose unique
// root x0 > 1 gives the genus-2 Bers constant as 12 arccosh(x0).
double gendulphe_quintic(double x);

// The unique root in (1, 2), isolated by bisection to 1e-12 after a sign
// analysis certifying exactly one sign change on a 4096-interval grid.
// Throws std::runtime_error if the sign analysis finds anything but one.
double gendulphe_root();

// 12 arccosh(gendulphe_root()).
Length gendulphe_constant();

// sqrt(6g) - 2 and 6 sqrt(3 pi) (g - 1): the closed-surface bracket
// bers_constant_lower(g) <= B_{g,0} <= bers_constant_upper(g).
// Throw std::invalid_argument for genus < 2.
Length bers_constant_lower(int genus);
Length bers_constant_upper(int genus);

std::string huber_report_json(const HuberReport& report);
std::string bers_report_json(const BersReport& report);

}  // namespace geowb
