#include "geowb/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geowb {

namespace {

ProjPoint normalized(double u, double v) {
  const double s = std::max(std::fabs(u), std::fabs(v));
  if (s == 0.0) throw std::domain_error("projective point (0:0)");
  u /= s;
  v /= s;
  if (v < 0.0 || (v == 0.0 && u < 0.0)) {
    u = -u;
    v = -v;
  }
  return {u, v};
}

constexpr double kProjEps = 1e-12;

}  // namespace

bool ProjPoint::is_infinite() const {
  return std::fabs(v) <= kProjEps * std::max(1.0, std::fabs(u));
}

double ProjPoint::value() const { return u / v; }

ProjPoint apply(const Isometry& g, const ProjPoint& p) {
  double ou, ov;
  g.apply_proj(p.u, p.v, ou, ov);
  return normalized(ou, ov);
}

GeodesicLine apply(const Isometry& g, const GeodesicLine& l) {
  return {apply(g, l.e0), apply(g, l.e1)};
}

Isometry normalizer_to_vertical(const GeodesicLine& l) {
  // Rows (v0, -u0) and (v1, -u1) send e0 -> 0 and e1 -> infinity.
  double a = l.e0.v, b = -l.e0.u;
  double c = l.e1.v, d = -l.e1.u;
  double det = a * d - b * c;
  if (std::fabs(det) < 1e-300)
    throw std::domain_error("normalizer_to_vertical: coincident endpoints");
  if (det < 0.0) {
    a = -a;
    b = -b;
    det = -det;
  }
  const double s = std::sqrt(det);
  Isometry g{a / s, b / s, c / s, d / s, 0};
  return g;
}

namespace {

// Images of line m under the normalizer of l, as two boundary values with
// projective safety. Returns false when either image is at 0 or infinity
// (shared endpoint: asymptotic lines).
bool normalized_endpoint_values(const GeodesicLine& l, const GeodesicLine& m,
                                double& x_min, double& x_max, bool& same_side) {
  const Isometry g = normalizer_to_vertical(l);
  const ProjPoint p = apply(g, m.e0);
  const ProjPoint q = apply(g, m.e1);
  const double scale_p = std::max(std::fabs(p.u), std::fabs(p.v));
  const double scale_q = std::max(std::fabs(q.u), std::fabs(q.v));
  if (std::fabs(p.v) <= kProjEps * scale_p || std::fabs(q.v) <= kProjEps * scale_q ||
      std::fabs(p.u) <= kProjEps * scale_p || std::fabs(q.u) <= kProjEps * scale_q)
    return false;
  const double a = p.value();
  const double b = q.value();
  same_side = (a > 0.0) == (b > 0.0);
  x_min = std::min(std::fabs(a), std::fabs(b));
  x_max = std::max(std::fabs(a), std::fabs(b));
  return true;
}

}  // namespace

double line_distance(const GeodesicLine& l1, const GeodesicLine& l2, bool* crossing) {
  if (crossing) *crossing = false;
  double x1, x2;
  bool same_side;
  if (!normalized_endpoint_values(l1, l2, x1, x2, same_side)) return 0.0;
  if (!same_side) {
    if (crossing) *crossing = true;
    return 0.0;
  }
  // d = 2*atanh(sqrt(x1/x2)) == arccosh((x2+x1)/(x2-x1)), stable at both ends.
  const double r = x1 / x2;
  if (r >= 1.0) return 0.0;  // shared endpoint in the limit
  return 2.0 * std::atanh(std::sqrt(r));
}

void common_perp_feet(const GeodesicLine& l1, const GeodesicLine& l2,
                      std::complex<double>& foot1, std::complex<double>& foot2) {
  const Isometry g = normalizer_to_vertical(l1);
  const ProjPoint p = apply(g, l2.e0);
  const ProjPoint q = apply(g, l2.e1);
  if (p.is_infinite() || q.is_infinite())
    throw std::domain_error("common_perp_feet: asymptotic lines");
  const double a = p.value();
  const double b = q.value();
  if (a == 0.0 || b == 0.0 || (a > 0.0) != (b > 0.0))
    throw std::domain_error("common_perp_feet: lines cross or are asymptotic");
  const double root = std::sqrt(a * b);  // a*b > 0
  const double m = (a + b) / 2.0;
  const double fx = a * b / m;
  const double fy = root * std::fabs(b - a) / std::fabs(a + b);
  const Isometry gi = g.inverse();
  foot1 = gi.apply(std::complex<double>(0.0, root));
  foot2 = gi.apply(std::complex<double>(fx, fy));
}

std::complex<double> line_intersection(const GeodesicLine& l1, const GeodesicLine& l2) {
  const Isometry g = normalizer_to_vertical(l1);
  const ProjPoint p = apply(g, l2.e0);
  const ProjPoint q = apply(g, l2.e1);
  if (p.is_infinite() || q.is_infinite())
    throw std::domain_error("line_intersection: lines do not cross");
  const double a = p.value();
  const double b = q.value();
  if ((a > 0.0) == (b > 0.0))
    throw std::domain_error("line_intersection: lines do not cross");
  return g.inverse().apply(std::complex<double>(0.0, std::sqrt(-a * b)));
}

namespace {

// Reflection in a line as a determinant -1 matrix M; the anti-Moebius map is
// z -> Moebius(M)(conj(z)). Products of two such matrices are isometries.
struct RefMatrix {
  double a, b, c, d;
};

RefMatrix reflection_matrix(const GeodesicLine& l) {
  const bool i0 = l.e0.is_infinite();
  const bool i1 = l.e1.is_infinite();
  if (i0 && i1) throw std::domain_error("reflection_matrix: degenerate line");
  if (i0 || i1) {
    const double x = i0 ? l.e1.value() : l.e0.value();
    return {-1.0, 2.0 * x, 0.0, 1.0};
  }
  const double p = l.e0.value();
  const double q = l.e1.value();
  if (p == q) throw std::domain_error("reflection_matrix: degenerate line");
  const double c = (p + q) / 2.0;
  const double r = std::fabs(q - p) / 2.0;
  return {c / r, (r * r - c * c) / r, 1.0 / r, -c / r};
}

}  // namespace

Isometry reflection_product(const GeodesicLine& l1, const GeodesicLine& l2) {
  const RefMatrix m = reflection_matrix(l1);
  const RefMatrix n = reflection_matrix(l2);
  Isometry g{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
             m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d, 0};
  g.renormalize();  // det = (-1)*(-1) = 1 up to roundoff
  return g;
}

int side_of(const GeodesicLine& l, std::complex<double> z) {
  // Re[(v0 z - u0) conj(v1 z - u1)] is the power of z relative to the
  // half-disk (orientation-blind); the endpoint cross product supplies the
  // orientation sign.
  const std::complex<double> f =
      (l.e0.v * z - l.e0.u) * std::conj(l.e1.v * z - l.e1.u);
  const double cross = l.e0.u * l.e1.v - l.e0.v * l.e1.u;
  const double s = f.real() * cross;
  const double scale = std::abs(f) * std::fabs(cross) + 1e-300;
  if (std::fabs(s) <= 1e-14 * scale) return 0;
  return s < 0.0 ? -1 : 1;  // left side is -1
}

std::complex<double> closest_point(const GeodesicLine& l, std::complex<double> z) {
  const Isometry g = normalizer_to_vertical(l);
  const std::complex<double> w = g.apply(z);
  return g.inverse().apply(std::complex<double>(0.0, std::abs(w)));
}

double line_point_distance(const GeodesicLine& l, std::complex<double> z) {
  const Isometry g = normalizer_to_vertical(l);
  const std::complex<double> w = g.apply(z);
  return std::acosh(std::max(1.0, std::abs(w) / w.imag()));
}

std::complex<double> point_along(const GeodesicLine& l, double s) {
  const Isometry g = normalizer_to_vertical(l);
  return g.inverse().apply(std::complex<double>(0.0, std::exp(s)));
}

}  // namespace geowb
