#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "geowb/holonomy.hpp"
#include "geowb/plot.hpp"

using namespace geowb;

namespace {

// Numbers in the d="..." / points="..." payloads of elements carrying the
// given class, paired as (x, y). Lets the containment contract be checked
// from the emitted bytes, not from internal state.
std::vector<std::complex<double>> svg_points(const std::string& svg,
                                             const std::string& cls) {
  std::vector<std::complex<double>> out;
  const std::string marker = "class=\"" + cls + "\"";
  std::size_t pos = 0;
  while ((pos = svg.find(marker, pos)) != std::string::npos) {
    const std::size_t d = svg.find(cls == "wall" ? "points=\"" : "d=\"", pos);
    const std::size_t start = d + (cls == "wall" ? 8 : 3);
    const std::size_t close = svg.find('"', start);
    const std::string payload = svg.substr(start, close - start);
    double x = 0;
    bool have_x = false;
    std::size_t i = 0;
    while (i < payload.size()) {
      const char c = payload[i];
      if ((c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.') {
        std::size_t j = i;
        while (j < payload.size() && payload[j] != ' ' && payload[j] != ',')
          ++j;
        const double v = std::stod(payload.substr(i, j - i));
        if (!have_x) {
          x = v;
          have_x = true;
        } else {
          out.emplace_back(x, v);
          have_x = false;
        }
        i = j;
      } else {
        ++i;
      }
    }
    pos = close;
  }
  return out;
}

int count_sub(const std::string& s, const std::string& needle) {
  int n = 0;
  std::size_t pos = 0;
  while ((pos = s.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("plot: slope set enumeration") {
  CHECK(plot_slope_set(0).empty());
  const auto s1 = plot_slope_set(1);
  REQUIRE(s1.size() == 3);
  CHECK((s1[0] == Slope{0, 1}));
  CHECK((s1[1] == Slope{1, 0}));
  CHECK((s1[2] == Slope{1, 1}));
  CHECK(plot_slope_set(2).size() == 5);
  CHECK(plot_slope_set(3).size() == 9);
  CHECK_THROWS_AS(plot_slope_set(-1), std::invalid_argument);
  CHECK_THROWS_AS(plot_slope_set(65), std::invalid_argument);
}

TEST_CASE("plot: Dirichlet domain folds translates back") {
  const HolonomyRep rep = modular_torus();
  const DirichletDomain dom(rep);
  CHECK(dom.wall_count() == 4 + 12 + 36 + 108);
  const std::complex<double> c = dom.center();
  CHECK(dom.violation(c) < 0.0);
  CHECK(std::abs(dom.fold(c) - c) == 0.0);

  const std::complex<double> z = c + std::complex<double>(0.08, 0.05);
  REQUIRE(dom.violation(z) < -1e-6);  // interior probe point
  CHECK(std::abs(dom.fold(z) - z) < 1e-12);
  const Isometry g = word_image(rep, "abA");
  const std::complex<double> moved = g.apply(z);
  CHECK(dom.violation(moved) > 1e-3);
  CHECK(std::abs(dom.fold(moved) - z) < 1e-9);
  const Isometry h = word_image(rep, "BBa");
  CHECK(std::abs(dom.fold(h.apply(z)) - z) < 1e-9);

  // Disk chart round trip.
  const std::complex<double> w = dom.to_disk(z);
  CHECK(std::abs(w) < 1.0);
  CHECK(std::abs(dom.from_disk(w) - z) < 1e-12);

  CHECK_THROWS_AS(DirichletDomain(rep, 0), std::invalid_argument);
  CHECK_THROWS_AS(DirichletDomain(rep, 9), std::invalid_argument);
}

TEST_CASE("plot: bound-1 SVG keeps every emitted point in the domain") {
  const HolonomyRep rep = modular_torus();
  PlotConfig cfg;
  cfg.slope_bound = 1;
  cfg.metadata = "check <&> escaping";
  PlotStats stats;
  const std::string svg = plot_geodesics_svg(rep, cfg, &stats);
  CHECK(stats.curves == 3);
  CHECK(count_sub(svg, "class=\"geodesic\"") == 3);
  CHECK(stats.max_violation <= 1e-6);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("&lt;&amp;&gt;") != std::string::npos);
  CHECK(count_sub(svg, "class=\"wall\"") >= 1);

  // Containment contract replayed from the bytes.
  const DirichletDomain dom(rep);
  const auto pts = svg_points(svg, "geodesic");
  CHECK(pts.size() >= stats.points);  // stranded points are duplicated
  double worst = -1.0;
  for (const auto& p : pts) {
    const std::complex<double> z =
        dom.from_disk(std::complex<double>(p.real(), -p.imag()));
    worst = std::max(worst, dom.violation(z));
  }
  CHECK(worst <= 1e-6);
  double worst_wall = -1.0;
  for (const auto& p : svg_points(svg, "wall")) {
    const std::complex<double> z =
        dom.from_disk(std::complex<double>(p.real(), -p.imag()));
    worst_wall = std::max(worst_wall, dom.violation(z));
  }
  CHECK(worst_wall <= 1e-6);

  // Deterministic bytes; doubling the resolution keeps the curve count.
  CHECK(plot_geodesics_svg(rep, cfg) == svg);
  PlotConfig dense = cfg;
  dense.samples_per_unit *= 2;
  PlotStats dstats;
  plot_geodesics_svg(rep, dense, &dstats);
  CHECK(dstats.curves == 3);
  CHECK(dstats.points > stats.points);
  CHECK(dstats.max_violation <= 1e-6);
}

TEST_CASE("plot: empty slope bound still renders a valid frame") {
  PlotConfig cfg;
  cfg.slope_bound = 0;
  PlotStats stats;
  const std::string svg = plot_geodesics_svg(modular_torus(), cfg, &stats);
  CHECK(stats.curves == 0);
  CHECK(count_sub(svg, "class=\"geodesic\"") == 0);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("plot: compact torus at bound 3") {
  const HolonomyRep rep = holonomy(torus_graph(), torus_fn(2.5, 0.7, 1.2));
  PlotConfig cfg;
  cfg.slope_bound = 3;
  PlotStats stats;
  const std::string svg = plot_geodesics_svg(rep, cfg, &stats);
  CHECK(stats.curves == 9);
  CHECK(stats.max_violation <= 1e-6);
  CHECK(count_sub(svg, "class=\"geodesic\"") == 9);
}

TEST_CASE("plot: bound 6 draws the full slope set") {
  PlotConfig cfg;
  cfg.slope_bound = 6;
  PlotStats stats;
  plot_geodesics_svg(modular_torus(), cfg, &stats);
  CHECK(stats.curves == static_cast<int>(plot_slope_set(6).size()));
  CHECK(stats.max_violation <= 1e-6);
}

TEST_CASE("plot: non-torus surfaces are rejected") {
  const HolonomyRep g2 =
      holonomy(genus2_graph(), genus2_fn(2.5, 2.2, 2.8, 0.3, 0.1, 0.6));
  PlotConfig cfg;
  CHECK_THROWS_AS(plot_geodesics_svg(g2, cfg), std::invalid_argument);
}
