#include "geowb/plot.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geowb/format.hpp"

namespace geowb {

namespace {

bool cancels(char x, char y) {
  return x != y && std::toupper(static_cast<unsigned char>(x)) ==
                       std::toupper(static_cast<unsigned char>(y));
}

// All nonempty reduced words of length <= depth over the generator letters
// and their uppercase inverses, shortest first, alphabet order within a
// length (deterministic wall order).
std::vector<std::string> reduced_words(const std::string& letters, int depth) {
  std::string alphabet;
  for (char c : letters) {
    alphabet += c;
    alphabet += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  std::vector<std::string> out;
  std::vector<std::string> frontier;
  for (char c : alphabet) frontier.emplace_back(1, c);
  out = frontier;
  for (int len = 2; len <= depth; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : frontier)
      for (char c : alphabet)
        if (!cancels(w.back(), c)) next.push_back(w + c);
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Geodesic through two distinct interior points.
GeodesicLine line_through(std::complex<double> z, std::complex<double> w) {
  const double dx = w.real() - z.real();
  const double scale = 1.0 + std::abs(z.real()) + std::abs(w.real());
  if (std::abs(dx) < 1e-12 * scale)
    return {ProjPoint::finite(0.5 * (z.real() + w.real())),
            ProjPoint::infinity()};
  const double xc = (std::norm(w) - std::norm(z)) / (2.0 * dx);
  const double r = std::abs(z - std::complex<double>(xc, 0.0));
  return {ProjPoint::finite(xc - r), ProjPoint::finite(xc + r)};
}

// Perpendicular bisector of the segment [z0, z1]: map the through-line to
// the vertical axis, where the bisector is the semicircle |w| = sqrt(t0 t1).
GeodesicLine bisector_line(std::complex<double> z0, std::complex<double> z1) {
  const Isometry n = normalizer_to_vertical(line_through(z0, z1));
  const double t = std::sqrt(std::abs(n.apply(z0)) * std::abs(n.apply(z1)));
  return apply(n.inverse(), GeodesicLine{ProjPoint::finite(-t),
                                         ProjPoint::finite(t)});
}

// Arclength parameter (in the point_along convention) of the point of the
// line closest to z: the vertical-axis point nearest N(z) is i |N(z)|.
double closest_param(const GeodesicLine& line, std::complex<double> z) {
  return std::log(std::abs(normalizer_to_vertical(line).apply(z)));
}

const char* kPalette[8] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                           "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

void append_disk_point(std::string& out, std::complex<double> disk) {
  out += format_double(disk.real());
  out += ',';
  out += format_double(-disk.imag());  // SVG y-axis points down
}

}  // namespace

DirichletDomain::DirichletDomain(const HolonomyRep& rep, int wall_depth)
    : center_(0.0, 1.0) {
  if (rep.preset != "torus")
    throw std::invalid_argument(
        "plotting requires a one-holed torus representation");
  if (wall_depth < 1 || wall_depth > 8)
    throw std::invalid_argument("wall_depth must be in 1..8");
  for (const std::string& word : reduced_words(rep.names, wall_depth)) {
    const Isometry g = word_image(rep, word);
    const std::complex<double> point = g.apply(center_);
    if (hyp_dist(center_, point) < 1e-6)
      throw std::runtime_error("degenerate Dirichlet wall for word " + word);
    walls_.push_back({g.inverse(), point, bisector_line(center_, point)});
  }
}

std::complex<double> DirichletDomain::fold(std::complex<double> z) const {
  for (int iter = 0; iter < 100000; ++iter) {
    const double here = hyp_dist(z, center_);
    double best = here - 1e-9;
    const Wall* best_wall = nullptr;
    for (const Wall& w : walls_) {
      const double d = hyp_dist(z, w.point);
      if (d < best) {
        best = d;
        best_wall = &w;
      }
    }
    if (best_wall == nullptr) return z;
    z = best_wall->pullback.apply(z);
  }
  throw std::runtime_error("Dirichlet folding did not settle");
}

double DirichletDomain::violation(std::complex<double> z) const {
  const double here = hyp_dist(z, center_);
  double worst = -std::numeric_limits<double>::infinity();
  for (const Wall& w : walls_) worst = std::max(worst, here - hyp_dist(z, w.point));
  return worst;
}

std::complex<double> DirichletDomain::to_disk(std::complex<double> z) const {
  return (z - center_) / (z - std::conj(center_));
}

std::complex<double> DirichletDomain::from_disk(std::complex<double> w) const {
  return (w * std::conj(center_) - center_) / (w - 1.0);
}

std::vector<std::vector<std::complex<double>>>
DirichletDomain::boundary_polylines(double reach, int samples_per_unit) const {
  if (!(reach > 0.0) || reach > 16.0)
    throw std::invalid_argument("wall reach must be in (0, 16]");
  if (samples_per_unit < 2 || samples_per_unit > 512)
    throw std::invalid_argument("samples_per_unit must be in 2..512");

  std::vector<std::vector<std::complex<double>>> out;
  for (const Wall& w : walls_) {
    const double mid = closest_param(w.bisector, center_);

    // Coarse pass: the violation along the bisector is 2-Lipschitz in
    // arclength, so with step 0.25 a face point forces a coarse sample
    // below 0.55; walls failing that nowhere cannot contribute boundary.
    bool relevant = false;
    const int coarse = static_cast<int>(std::ceil(2.0 * reach / 0.25));
    for (int k = 0; k <= coarse && !relevant; ++k) {
      const double s = mid - reach + 2.0 * reach * k / coarse;
      relevant = violation(point_along(w.bisector, s)) <= 0.55;
    }
    if (!relevant) continue;

    const int n = std::max(2, static_cast<int>(std::ceil(
                                  2.0 * reach * samples_per_unit)));
    std::vector<std::complex<double>> run;
    for (int k = 0; k <= n; ++k) {
      const double s = mid - reach + 2.0 * reach * k / n;
      const std::complex<double> z = point_along(w.bisector, s);
      if (violation(z) <= 1e-7) {
        run.push_back(z);
      } else if (!run.empty()) {
        if (run.size() >= 2) out.push_back(std::move(run));
        run.clear();
      }
    }
    if (run.size() >= 2) out.push_back(std::move(run));
  }
  return out;
}

std::vector<Slope> plot_slope_set(int bound) {
  if (bound < 0 || bound > 64)
    throw std::invalid_argument("slope bound must be in 0..64");
  std::vector<Slope> slopes;
  for (int p = 0; p <= bound; ++p)
    for (int q = 0; q <= bound; ++q) {
      if (p == 0 && q == 0) continue;
      if (std::gcd(p, q) != 1) continue;
      slopes.push_back(Slope{p, q});
    }
  return slopes;
}

std::string plot_geodesics_svg(const HolonomyRep& rep,
                               const PlotConfig& config, PlotStats* stats) {
  if (config.samples_per_unit < 2 || config.samples_per_unit > 512)
    throw std::invalid_argument("samples_per_unit must be in 2..512");
  const DirichletDomain domain(rep, config.wall_depth);
  const std::vector<Slope> slopes = plot_slope_set(config.slope_bound);

  PlotStats local;
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
      "height=\"640\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
  if (!config.metadata.empty())
    svg += "<desc>" + escape_xml(config.metadata) + "</desc>\n";
  svg +=
      "<rect x=\"-1.05\" y=\"-1.05\" width=\"2.1\" height=\"2.1\" "
      "fill=\"#ffffff\"/>\n"
      "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#c8c8c8\" "
      "stroke-width=\"0.004\"/>\n";

  svg += "<g class=\"walls\" fill=\"none\" stroke=\"#9aa0a6\" "
         "stroke-width=\"0.004\">\n";
  for (const auto& run :
       domain.boundary_polylines(config.wall_reach, config.samples_per_unit)) {
    svg += "<polyline class=\"wall\" points=\"";
    for (std::size_t i = 0; i < run.size(); ++i) {
      if (i > 0) svg += ' ';
      append_disk_point(svg, domain.to_disk(run[i]));
    }
    svg += "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g class=\"geodesics\" fill=\"none\" stroke-width=\"0.006\" "
         "stroke-linecap=\"round\">\n";
  for (std::size_t index = 0; index < slopes.size(); ++index) {
    const std::string word = christoffel(slopes[index]);
    const Isometry g = word_image(rep, word);
    if (classify(g) != IsomClass::Hyperbolic)
      throw std::runtime_error("slope image is not hyperbolic: " + word);
    const AxisEnds ends = axis_ends(g);
    const GeodesicLine axis{ProjPoint{ends.ru, ends.rv},
                            ProjPoint{ends.au, ends.av}};
    const double length = translation_length(g);
    const double start = closest_param(axis, domain.center());
    const int n = std::max(
        2, static_cast<int>(std::ceil(length * config.samples_per_unit)));
    const double step = length / n;
    const double jump = std::min(3.0 * step, 0.9);

    // One period of the axis, folded; a break indicates a sheet change.
    std::vector<std::vector<std::complex<double>>> pieces;
    std::complex<double> previous;
    for (int k = 0; k <= n; ++k) {
      const std::complex<double> z =
          domain.fold(point_along(axis, start + step * k));
      local.max_violation = std::max(local.max_violation, domain.violation(z));
      ++local.points;
      if (k == 0 || hyp_dist(previous, z) > jump)
        pieces.emplace_back();
      pieces.back().push_back(z);
      previous = z;
    }

    svg += "<path class=\"geodesic\" stroke=\"";
    svg += kPalette[index % 8];
    svg += "\" d=\"";
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      if (p > 0) svg += ' ';
      svg += "M ";
      append_disk_point(svg, domain.to_disk(pieces[p][0]));
      // A single stranded sample still draws (zero-length segment).
      for (std::size_t i = 1; i < std::max<std::size_t>(pieces[p].size(), 2);
           ++i) {
        svg += " L ";
        append_disk_point(
            svg, domain.to_disk(pieces[p][std::min(i, pieces[p].size() - 1)]));
      }
    }
    svg += "\"/>\n";
    local.pieces += static_cast<int>(pieces.size());
    ++local.curves;
  }
  svg += "</g>\n</svg>\n";

  if (stats != nullptr) *stats = local;
  return svg;
}

}  // namespace geowb
