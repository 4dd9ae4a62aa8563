#include "geowb/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "geowb/constants.hpp"
#include "geowb/trace_tree.hpp"

namespace geowb {

SystoleResult systole(const HolonomyRep& rep, Length search_cap) {
  SystoleResult res;
  Length cutoff = systole_search_cutoff0();
  for (;;) {
    const GeodesicSpectrum spec = enumerate_geodesics(rep, cutoff);
    if (!spec.classes.empty()) {
      res.length = spec.classes.front().length;
      for (const GeodesicClass& c : spec.classes) {
        if (c.length - res.length > tol_bucket * std::max(1.0, res.length))
          break;
        res.witnesses.push_back(c);
      }
      res.cutoff_used = cutoff;
      res.status = "ok";
      return res;
    }
    if (cutoff >= search_cap) {
      res.length = std::numeric_limits<double>::infinity();
      res.cutoff_used = cutoff;
      res.status = "inconclusive";
      return res;
    }
    cutoff = std::min(cutoff * 1.5, search_cap);
  }
}

HuberReport huber_check(const HolonomyRep& rep, Length l_min, Length l_max,
                        int n_points) {
  if (n_points < 4)
    throw std::invalid_argument("huber_check: grid needs at least 4 points");
  if (!(l_min > 0.0) || !(l_max > l_min))
    throw std::invalid_argument("huber_check: need 0 < l_min < l_max");

  const GeodesicSpectrum spec = enumerate_geodesics(rep, l_max);
  std::vector<Length> lengths;
  lengths.reserve(spec.classes.size());
  for (const GeodesicClass& c : spec.classes)
    if (c.primitive) lengths.push_back(c.length);
  // Already sorted: classes are sorted by length.

  HuberReport report;
  report.enumeration = spec.status;
  report.grid.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    HuberPoint pt;
    pt.l = l_min + (l_max - l_min) * static_cast<double>(i) /
                       static_cast<double>(n_points - 1);
    pt.n_all = static_cast<long long>(
        std::upper_bound(lengths.begin(), lengths.end(), pt.l) -
        lengths.begin());
    pt.scaled = static_cast<double>(pt.n_all) * pt.l * std::exp(-pt.l);
    report.grid.push_back(pt);
  }

  // Fit log N against L over the top half of the grid.
  const Length half = 0.5 * (l_min + l_max);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int used = 0;
  double scaled_min = std::numeric_limits<double>::infinity();
  double scaled_max = -std::numeric_limits<double>::infinity();
  double scaled_sum = 0.0;
  for (const HuberPoint& pt : report.grid) {
    if (pt.l < half || pt.n_all < 1) continue;
    const double x = pt.l, y = std::log(static_cast<double>(pt.n_all));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
    scaled_min = std::min(scaled_min, pt.scaled);
    scaled_max = std::max(scaled_max, pt.scaled);
    scaled_sum += pt.scaled;
  }
  if (used < 4)
    throw std::invalid_argument(
        "huber_check: fewer than 4 usable points in the top half");
  const double denom = used * sxx - sx * sx;
  report.slope = (used * sxy - sx * sy) / denom;
  report.drift = (scaled_max - scaled_min) / (scaled_sum / used);
  report.status = report.slope >= 0.85 && report.slope <= 1.15
                      ? "converging"
                      : "not_converging";
  return report;
}

BersReport bers_upper(const HolonomyRep& rep) {
  BersReport report;
  if (rep.preset == "torus") {
    report.curves = {BersCurve{"a", rep.curve_lengths.at(0)}};
  } else if (rep.preset == "genus2") {
    report.curves = {BersCurve{"BA", rep.curve_lengths.at(0)},
                     BersCurve{"a", rep.curve_lengths.at(1)},
                     BersCurve{"b", rep.curve_lengths.at(2)}};
  } else {
    for (std::size_t i = 0; i < rep.curve_lengths.size(); ++i)
      report.curves.push_back(
          BersCurve{std::string(1, static_cast<char>('a' + i)),
                    rep.curve_lengths[i]});
  }

  const std::size_t expected =
      static_cast<std::size_t>(3 * rep.genus - 3 + rep.n_boundary);
  if (report.curves.size() != expected)
    throw std::runtime_error("bers_upper: curve count differs from 3g-3+n");
  report.l_p = 0.0;
  for (const BersCurve& c : report.curves) {
    const Length direct = word_length(rep, c.word);
    if (std::abs(direct - c.length) > 1e-8 * std::max(1.0, c.length))
      throw std::runtime_error(
          "bers_upper: curve word length disagrees with FN length");
    report.l_p = std::max(report.l_p, c.length);
  }

  report.improved_l_p = report.l_p;
  report.flips_tried = 0;
  if (rep.preset == "torus") {
    // Every simple slope on the one-holed torus is by itself a pants
    // decomposition, so replacement moves are certified for free.
    const SimpleSpectrum tree =
        trace_tree(rep, report.l_p * (1.0 + 1e-12) + 1e-12);
    report.flips_tried = static_cast<long long>(tree.entries.size());
    for (const SimpleEntry& e : tree.entries) {
      if (e.length < report.improved_l_p * (1.0 - 1e-12)) {
        report.improved_l_p = e.length;
        report.improved_word = christoffel(e.slope);
      }
    }
  }
  report.status = "upper_bound_only";
  return report;
}

double gendulphe_quintic(double x) {
  return ((((32.0 * x - 32.0) * x - 24.0) * x + 24.0) * x) * x - 1.0;
}

double gendulphe_root() {
  // Sign analysis on [1, 2]: exactly one sign change among 4096 intervals.
  constexpr int kCells = 4096;
  double lo = 0.0, hi = 0.0;
  int changes = 0;
  double prev_x = 1.0, prev_f = gendulphe_quintic(1.0);
  for (int i = 1; i <= kCells; ++i) {
    const double x = 1.0 + static_cast<double>(i) / kCells;
    const double f = gendulphe_quintic(x);
    if ((prev_f < 0.0 && f >= 0.0) || (prev_f >= 0.0 && f < 0.0)) {
      ++changes;
      lo = prev_x;
      hi = x;
    }
    prev_x = x;
    prev_f = f;
  }
  if (changes != 1)
    throw std::runtime_error("gendulphe_root: sign analysis on (1,2] found " +
                             std::to_string(changes) + " sign changes");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (gendulphe_quintic(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Length gendulphe_constant() { return 12.0 * std::acosh(gendulphe_root()); }

Length bers_constant_lower(int genus) {
  if (genus < 2)
    throw std::invalid_argument("bers_constant_lower: genus must be >= 2");
  return std::sqrt(6.0 * genus) - 2.0;
}

Length bers_constant_upper(int genus) {
  if (genus < 2)
    throw std::invalid_argument("bers_constant_upper: genus must be >= 2");
  return 6.0 * std::sqrt(3.0 * std::numbers::pi) * (genus - 1);
}

std::string huber_report_json(const HuberReport& report) {
  nlohmann::ordered_json j;
  j["grid"] = nlohmann::ordered_json::array();
  for (const HuberPoint& pt : report.grid)
    j["grid"].push_back({{"l", pt.l}, {"n_all", pt.n_all}, {"scaled", pt.scaled}});
  j["slope"] = report.slope;
  j["drift"] = report.drift;
  j["enumeration"] = report.enumeration;
  j["status"] = report.status;
  return j.dump(2);
}

std::string bers_report_json(const BersReport& report) {
  nlohmann::ordered_json j;
  j["curves"] = nlohmann::ordered_json::array();
  for (const BersCurve& c : report.curves)
    j["curves"].push_back({{"word", c.word}, {"length", c.length}});
  j["l_p"] = report.l_p;
  j["improved_l_p"] = report.improved_l_p;
  j["improved_word"] = report.improved_word;
  j["flips_tried"] = report.flips_tried;
  j["status"] = report.status;
  return j.dump(2);
}

}  // namespace geowb
