#include "geowb/hyptrig.hpp"

#include <cmath>
#include <stdexcept>

#include "geowb/constants.hpp"

namespace geowb {

double genus2_systole_bound() {
  static const double v = 2.0 * std::acosh(1.0 + std::sqrt(2.0));
  return v;
}

double systole_search_cutoff0() { return genus2_systole_bound() + 1.0; }

Length collar_width(Length l) {
  if (!(l > 0.0)) throw std::domain_error("collar_width: length must be positive");
  return std::asinh(1.0 / std::sinh(l / 2.0));
}

Length hexagon_perp(Length l_gamma, Length l_delta) {
  if (!(l_delta > 0.0)) throw std::domain_error("hexagon_perp: l_delta must be positive");
  if (l_gamma < 0.0) throw std::domain_error("hexagon_perp: l_gamma must be nonnegative");
  const double ch = std::cosh(l_delta / 2.0);
  const double sh2 = std::sinh(l_delta / 2.0) * std::sinh(l_delta / 2.0);
  return std::acosh((std::cosh(l_gamma / 2.0) + ch * ch) / sh2);
}

Length pentagon_perp(Length l_gamma, Length l_delta) {
  if (!(l_delta > 0.0)) throw std::domain_error("pentagon_perp: l_delta must be positive");
  if (l_gamma < 0.0) throw std::domain_error("pentagon_perp: l_gamma must be nonnegative");
  const double cg = std::cosh(l_gamma / 4.0);
  const double cd = std::cosh(l_delta / 2.0);
  const double num = cg * cg + cd * cd - 1.0;
  const double den = cd * cd - 1.0;
  return 2.0 * std::acosh(std::sqrt(num / den));
}

Length quad_opposite(Length c, Length l_delta) {
  if (!(c > 0.0)) throw std::domain_error("quad_opposite: c must be positive");
  if (!(l_delta > 0.0)) throw std::domain_error("quad_opposite: l_delta must be positive");
  return 2.0 * std::acosh(std::cosh(c / 2.0) * std::cosh(l_delta / 4.0));
}

Length trace_to_length(double t) {
  const double a = std::fabs(t);
  if (a <= 2.0 + tol_trace) {
    if (a < 2.0 - tol_trace) throw std::domain_error("trace_to_length: elliptic trace");
    return 0.0;
  }
  return 2.0 * std::acosh(a / 2.0);
}

double length_to_trace(Length l) {
  if (l < 0.0) throw std::domain_error("length_to_trace: negative length");
  return 2.0 * std::cosh(l / 2.0);
}

}  // namespace geowb
