#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "geowb/constants.hpp"
#include "geowb/hyptrig.hpp"
#include "geowb/isometry.hpp"

using namespace geowb;

TEST_CASE("isometry: classification") {
  CHECK(classify(Isometry::identity()) == IsomClass::Identity);
  CHECK(classify(Isometry{-1.0, 0.0, 0.0, -1.0}) == IsomClass::Identity);
  CHECK(classify(Isometry{1.0, 1.0, 0.0, 1.0}) == IsomClass::Parabolic);
  CHECK(classify(Isometry{1.0, 0.0, -2.0, 1.0}) == IsomClass::Parabolic);
  const double c = std::cos(0.4), s = std::sin(0.4);
  CHECK(classify(Isometry{c, s, -s, c}) == IsomClass::Elliptic);
  const double e = std::exp(1.0);
  CHECK(classify(Isometry{e, 0.0, 0.0, 1.0 / e}) == IsomClass::Hyperbolic);
}

TEST_CASE("isometry: translation length") {
  const double e = std::exp(1.0);
  const Isometry g{e, 0.0, 0.0, 1.0 / e};
  CHECK(std::abs(translation_length(g) - 2.0) <= 1e-14);
  CHECK(translation_length(Isometry{1.0, 3.0, 0.0, 1.0}) == 0.0);
  CHECK(translation_length(Isometry::identity()) == 0.0);
  const double c = std::cos(0.4), s = std::sin(0.4);
  CHECK_THROWS_AS(translation_length(Isometry{c, s, -s, c}),
                  std::domain_error);
  // Dictionary consistency for a generic hyperbolic matrix.
  const Isometry h{3.0, 1.0, 1.0, 1.0};  // trace 4, det 2 -> normalize
  Isometry hn = h;
  hn.renormalize();
  CHECK(std::abs(hn.det() - 1.0) <= 1e-15);
  CHECK(std::abs(translation_length(hn) - trace_to_length(hn.trace())) <=
        1e-14);
}

TEST_CASE("isometry: Moebius action and distance") {
  const std::complex<double> i(0.0, 1.0);
  const Isometry t{1.0, 1.0, 0.0, 1.0};
  CHECK(std::abs(t.apply(i) - (i + 1.0)) <= 1e-15);

  // d(i, i+1) = arccosh(1 + |z-w|^2 / (2 Im z Im w)) = arccosh(3/2).
  CHECK(std::abs(hyp_dist(i, i + 1.0) - std::acosh(1.5)) <= 1e-14);
  CHECK(hyp_dist(i, i) == 0.0);
  CHECK(std::abs(hyp_dist(i, 4.0 * i) - std::log(4.0)) <= 1e-14);

  // Isometries preserve the distance.
  const Isometry g{2.0, 1.0, 1.0, 1.0};
  const std::complex<double> z(0.3, 0.8), w(-1.1, 2.5);
  CHECK(std::abs(hyp_dist(g.apply(z), g.apply(w)) - hyp_dist(z, w)) <= 1e-12);

  // Projective boundary action matches the Moebius formula.
  double u = 0.0, v = 0.0;
  g.apply_proj(1.0, 1.0, u, v);  // the point x = 1
  CHECK(std::abs(u / v - (2.0 * 1.0 + 1.0) / (1.0 + 1.0)) <= 1e-15);
  g.apply_proj(1.0, 0.0, u, v);  // infinity -> a/c
  CHECK(std::abs(u / v - 2.0) <= 1e-15);
}

TEST_CASE("isometry: axis ends of a hyperbolic element") {
  const double e = std::exp(1.0);
  const AxisEnds ends = axis_ends(Isometry{e, 0.0, 0.0, 1.0 / e});
  // Repelling 0, attracting infinity.
  CHECK(std::abs(ends.ru / ends.rv) <= 1e-14);
  CHECK(ends.av == 0.0);
  CHECK(ends.au != 0.0);
  CHECK_THROWS_AS(axis_ends(Isometry{1.0, 1.0, 0.0, 1.0}), std::domain_error);

  // Fixed points are genuinely fixed.
  const Isometry g{2.0, 1.0, 1.0, 1.0};
  const AxisEnds eg = axis_ends(g);
  double u = 0.0, v = 0.0;
  g.apply_proj(eg.au, eg.av, u, v);
  CHECK(std::abs(u * eg.av - v * eg.au) <= 1e-12);
  g.apply_proj(eg.ru, eg.rv, u, v);
  CHECK(std::abs(u * eg.rv - v * eg.ru) <= 1e-12);
}

TEST_CASE("isometry: products renormalize over long words") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Isometry acc = Isometry::identity();
  const Isometry a{1.5, 0.7, 0.4, 0.853333333333333333};  // det ~ 1
  Isometry an = a;
  an.renormalize();
  for (int k = 0; k < 5000; ++k) {
    acc = acc * (uni(rng) > 0 ? an : an.inverse());
    CHECK(std::abs(acc.det() - 1.0) <= 1e-10);
  }
  // PSL-aware distance: the identity and its negative are both at 0.
  CHECK(dist_to_identity(Isometry::identity()) == 0.0);
  CHECK(dist_to_identity(Isometry{-1.0, 0.0, 0.0, -1.0}) <= 1e-15);
  CHECK(dist_to_identity(an * an.inverse()) <= 1e-12);
  CHECK(dist_to_identity(an) > 0.1);
  CHECK(std::abs(Isometry::identity().frobenius() - std::sqrt(2.0)) <=
        1e-15);
}
