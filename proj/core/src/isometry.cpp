#include "geowb/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geowb/constants.hpp"

namespace geowb {

std::complex<double> Isometry::apply(std::complex<double> z) const {
  return (a * z + b) / (c * z + d);
}

void Isometry::apply_proj(double u, double v, double& out_u, double& out_v) const {
  out_u = a * u + b * v;
  out_v = c * u + d * v;
}

void Isometry::renormalize() {
  const double s = std::sqrt(det());
  a /= s;
  b /= s;
  c /= s;
  d /= s;
  age = 0;
}

double Isometry::frobenius() const {
  return std::sqrt(a * a + b * b + c * c + d * d);
}

Isometry operator*(const Isometry& x, const Isometry& y) {
  Isometry r{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
             x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d,
             std::max(x.age, y.age) + 1};
  if (r.age >= renorm_interval) r.renormalize();
  return r;
}

IsomClass classify(const Isometry& g) {
  const double t = std::fabs(g.trace());
  if (t > 2.0 + tol_trace) return IsomClass::Hyperbolic;
  if (t < 2.0 - tol_trace) return IsomClass::Elliptic;
  // |tr| ~ 2: the identity (up to sign) has off-diagonal ~ 0 and a ~ d.
  if (std::fabs(g.b) <= tol_trace && std::fabs(g.c) <= tol_trace &&
      std::fabs(g.a - g.d) <= tol_trace)
    return IsomClass::Identity;
  return IsomClass::Parabolic;
}

Length translation_length(const Isometry& g) { return trace_to_length(g.trace()); }

AxisEnds axis_ends(const Isometry& g) {
  if (classify(g) != IsomClass::Hyperbolic)
    throw std::domain_error("axis_ends: isometry is not hyperbolic");
  // Fixed points of (az+b)/(cz+d): c z^2 + (d-a) z - b = 0.
  // Normalize the matrix to positive trace so the attracting fixed point is
  // the one with |c*z + d| > 1 ... equivalently, for tr > 2 the attracting
  // point is z_+ = ((a-d) + sqrt(tr^2-4)) / (2c) when c != 0.
  Isometry m = g;
  if (m.trace() < 0) {
    m.a = -m.a; m.b = -m.b; m.c = -m.c; m.d = -m.d;
  }
  const double tr = m.trace();
  const double disc = std::sqrt(tr * tr - 4.0);
  AxisEnds e{};
  if (std::fabs(m.c) > 1e-300) {
    const double za = ((m.a - m.d) + disc) / (2.0 * m.c);
    const double zr = ((m.a - m.d) - disc) / (2.0 * m.c);
    e.au = za; e.av = 1.0;
    e.ru = zr; e.rv = 1.0;
  } else {
    // c = 0: one fixed point at infinity. z -> (a/d) z + b/d; |a/d| != 1.
    // Infinity attracts iff |a| > |d|.
    const double zf = m.b / (m.d - m.a);  // finite fixed point
    if (std::fabs(m.a) > std::fabs(m.d)) {
      e.au = 1.0; e.av = 0.0;
      e.ru = zf;  e.rv = 1.0;
    } else {
      e.au = zf;  e.av = 1.0;
      e.ru = 1.0; e.rv = 0.0;
    }
  }
  return e;
}

namespace {

// Largest singular value of a 2x2 matrix.
double op_norm(double a, double b, double c, double d) {
  const double q = a * a + b * b + c * c + d * d;
  const double det = a * d - b * c;
  const double disc = std::sqrt(std::max(0.0, q * q - 4.0 * det * det));
  return std::sqrt((q + disc) / 2.0);
}

}  // namespace

double dist_to_identity(const Isometry& g) {
  const double plus = op_norm(g.a - 1.0, g.b, g.c, g.d - 1.0);
  const double minus = op_norm(g.a + 1.0, g.b, g.c, g.d + 1.0);
  return std::min(plus, minus);
}

double hyp_dist(std::complex<double> z, std::complex<double> w) {
  const double num = std::norm(z - w);
  const double den = 2.0 * z.imag() * w.imag();
  return std::acosh(1.0 + num / den);
}

}  // namespace geowb
