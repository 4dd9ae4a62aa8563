#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "geowb/enumerate.hpp"
#include "geowb/holonomy.hpp"
#include "geowb/slope.hpp"
#include "geowb/spectra.hpp"
#include "geowb/trace_tree.hpp"
#include "oracle_values.hpp"

using namespace geowb;

namespace {
const double kLstar = 2.0 * std::acosh(1.5);
}

TEST_CASE("spectra: word utilities") {
  CHECK(invert_word("ab") == "BA");
  CHECK(invert_word("aB") == "bA");
  CHECK(cyclic_reduce("aBA") == "B");
  CHECK(cyclic_reduce("ab") == "ab");
  CHECK(canonical_cyclic("ab") == canonical_cyclic("BA"));
  CHECK(canonical_cyclic("ab") == canonical_cyclic("ba"));
  CHECK(canonical_cyclic("aab") == canonical_cyclic("aba"));
  CHECK(canonical_cyclic("aab") == canonical_cyclic("BAA"));
  CHECK(canonical_cyclic("ab") == "ab");
}

TEST_CASE("spectra: christoffel words") {
  CHECK(christoffel(Slope{1, 0}) == "a");
  CHECK(christoffel(Slope{0, 1}) == "b");
  CHECK(christoffel(Slope{1, 1}) == "ab");
  CHECK(christoffel(Slope{-1, 1}) == "aB");
  CHECK(christoffel(Slope{2, 1}) == "aab");
  CHECK(christoffel(Slope{3, 2}).size() == 5);
}

TEST_CASE("spectra: enumeration matches the trace tree on simple classes") {
  const HolonomyRep modular = modular_torus();
  const double L = 8.0;
  const GeodesicSpectrum spec = enumerate_geodesics(modular, L);
  const SimpleSpectrum tree = trace_tree(modular, L);
  std::map<std::string, double> enum_words;
  for (const auto& c : spec.classes) {
    CHECK(!enum_words.count(c.word));  // canonical words are unique
    enum_words[c.word] = c.length;
    CHECK(c.trace > 2.0);
    CHECK(c.length <= L + 1e-12);
  }
  std::size_t matched = 0;
  for (const auto& e : tree.entries) {
    const std::string w = canonical_cyclic(christoffel(e.slope));
    const auto it = enum_words.find(w);
    REQUIRE(it != enum_words.end());
    CHECK(std::abs(it->second - e.length) <= 1e-9);
    ++matched;
  }
  CHECK(matched == tree.entries.size());
  // The parabolic boundary class never sneaks in.
  CHECK(!enum_words.count(canonical_cyclic("BabA")));
  // Non-simple classes exist at this cutoff.
  CHECK(spec.classes.size() > tree.entries.size());

  // Same agreement on a generic (non-square, compact-boundary) torus.
  const HolonomyRep rep = holonomy(torus_graph(), torus_fn(2.2, 0.4, 0.7));
  const GeodesicSpectrum gspec = enumerate_geodesics(rep, L);
  const SimpleSpectrum gtree = trace_tree(rep, L);
  std::map<std::string, double> gwords;
  for (const auto& c : gspec.classes) gwords[c.word] = c.length;
  for (const auto& e : gtree.entries) {
    const std::string w = canonical_cyclic(christoffel(e.slope));
    const auto it = gwords.find(w);
    REQUIRE(it != gwords.end());
    CHECK(std::abs(it->second - e.length) <= 1e-9);
  }
}

TEST_CASE("spectra: raising the cutoff adds no class below it") {
  const HolonomyRep modular = modular_torus();
  const double L = 6.0;
  const GeodesicSpectrum a = enumerate_geodesics(modular, L);
  const GeodesicSpectrum b = enumerate_geodesics(modular, 1.1 * L);
  std::vector<GeodesicClass> filtered;
  for (const auto& c : b.classes)
    if (c.length <= L) filtered.push_back(c);
  REQUIRE(filtered.size() == a.classes.size());
  for (std::size_t i = 0; i < filtered.size(); ++i) {
    CHECK(filtered[i].word == a.classes[i].word);
    CHECK(std::abs(filtered[i].length - a.classes[i].length) <= 1e-12);
    CHECK(filtered[i].primitive == a.classes[i].primitive);
  }
}

TEST_CASE("spectra: power classes are marked and rooted") {
  const GeodesicSpectrum spec = enumerate_geodesics(modular_torus(), 6.0);
  int powers = 0;
  for (const auto& c : spec.classes) {
    if (c.primitive) continue;
    ++powers;
    bool has_root = false;
    for (const auto& r : spec.classes) {
      if (!r.primitive) continue;
      for (int k = 2; k <= 4; ++k)
        if (std::abs(r.length * k - c.length) <= 1e-8) has_root = true;
    }
    CHECK(has_root);
  }
  CHECK(powers > 0);  // "aa" has length 2 lstar < 6
}

TEST_CASE("spectra: Huber-scale growth of the full spectrum") {
  const HuberReport rep = huber_check(modular_torus(), 6.0, 12.0, 13);
  CHECK(rep.status == "converging");
  CHECK(rep.slope >= 0.85);
  CHECK(rep.slope <= 1.15);
  REQUIRE(rep.grid.size() == 13);
  for (std::size_t i = 1; i < rep.grid.size(); ++i)
    CHECK(rep.grid[i].n_all >= rep.grid[i - 1].n_all);
  // All classes dominate the simple classes.
  const SimpleSpectrum tree = trace_tree(modular_torus(), 12.0);
  CHECK(rep.grid.back().n_all >= static_cast<long long>(tree.entries.size()));

  const std::string js = huber_report_json(rep);
  CHECK(js.find("\"grid\"") != std::string::npos);
  CHECK(js.find("\"slope\"") != std::string::npos);
  CHECK_THROWS_AS(huber_check(modular_torus(), 4.0, 7.0, 3),
                  std::invalid_argument);
}

TEST_CASE("spectra: modular systole with three witnesses") {
  const SystoleResult s = systole(modular_torus());
  CHECK(s.status == "ok");
  CHECK(std::abs(s.length - kLstar) <= 1e-10);
  CHECK(std::abs(s.length - oracle::len_tr3) <= 1e-10);
  REQUIRE(s.witnesses.size() == 3);
  for (const auto& w : s.witnesses) CHECK(w.primitive);
}

TEST_CASE("spectra: genus-2 enumeration and systole") {
  const HolonomyRep g2 =
      holonomy(genus2_graph(), genus2_fn(2.5, 2.2, 2.8, 0.3, 0.1, 0.6));
  const GeodesicSpectrum spec = enumerate_geodesics(g2, 4.0);
  CHECK(!spec.classes.empty());
  // The three decomposition cuffs appear at their coordinate lengths.
  int cuffs = 0;
  for (const auto& c : spec.classes)
    for (double L : {2.5, 2.2, 2.8})
      if (std::abs(c.length - L) <= 1e-9) ++cuffs;
  CHECK(cuffs == 3);

  const SystoleResult s = systole(g2);
  CHECK(s.status == "ok");
  CHECK(std::abs(s.length - 2.2) <= 1e-9);  // the shortest cuff
  CHECK(s.length <= oracle::bolza_systole + 1e-9);

  // The fast path agrees with the canonical systole.
  const double fast = shortest_geodesic_length(g2, s.cutoff_used);
  CHECK(std::abs(fast - s.length) <= 1e-6);

  // A full twist is a remarking; the systole cannot move.
  const HolonomyRep g2_tw = holonomy(
      genus2_graph(), genus2_fn(2.5, 2.2, 2.8, 0.3 + 2.5, 0.1, 0.6));
  CHECK(std::abs(systole(g2_tw).length - s.length) <= 1e-9);

  // Power classes appear past twice the systole.
  const GeodesicSpectrum spec2 = enumerate_geodesics(g2, 2.2 * s.length);
  int powers = 0;
  for (const auto& c : spec2.classes)
    if (!c.primitive) ++powers;
  CHECK(powers > 0);

  // Margin certificate as on the torus.
  const GeodesicSpectrum a = enumerate_geodesics(g2, 3.2);
  const GeodesicSpectrum b = enumerate_geodesics(g2, 3.52);
  std::size_t keep = 0;
  for (const auto& c : b.classes)
    if (c.length <= 3.2) ++keep;
  CHECK(keep == a.classes.size());
}

TEST_CASE("spectra: fast path below the systole reports infinity") {
  CHECK(shortest_geodesic_length(modular_torus(), 0.5) ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("spectra: quintic root and decomposition-constant brackets") {
  CHECK(gendulphe_quintic(1.0) == -1.0);
  const double x0 = gendulphe_root();
  const double B = gendulphe_constant();
  CHECK(std::abs(x0 - oracle::gendulphe_x0) <= 1e-12);
  CHECK(std::abs(B - oracle::gendulphe_b20) <= 1e-9);
  CHECK(bers_constant_lower(2) >= oracle::buser_low_2 - 1e-12);
  CHECK(bers_constant_lower(2) <= oracle::buser_low_2 + 1e-12);
  CHECK(std::abs(bers_constant_upper(2) - oracle::buser_high_2) <= 1e-10);
  CHECK(B >= bers_constant_lower(2));
  CHECK(B <= bers_constant_upper(2));
}

TEST_CASE("spectra: pants-decomposition upper bounds") {
  const BersReport r = bers_upper(modular_torus());
  REQUIRE(r.curves.size() == 1);
  CHECK(r.curves[0].word == "a");
  CHECK(std::abs(r.l_p - kLstar) <= 1e-12);
  CHECK(r.improved_l_p == r.l_p);  // the defining curve is already systolic
  CHECK(r.improved_word.empty());
  CHECK(r.flips_tried >= 1);
  CHECK(r.status == "upper_bound_only");

  // A fat torus admits a strictly shorter decomposition curve.
  const HolonomyRep fat = holonomy(torus_graph(), torus_fn(4.0, 2.0, 0.0));
  const BersReport rf = bers_upper(fat);
  CHECK(rf.l_p == 4.0);
  CHECK(rf.improved_l_p < rf.l_p);
  CHECK(!rf.improved_word.empty());
  CHECK(rf.improved_l_p >= systole(fat).length - 1e-9);

  const HolonomyRep g2 =
      holonomy(genus2_graph(), genus2_fn(2.5, 2.2, 2.8, 0.3, 0.1, 0.6));
  const BersReport rg = bers_upper(g2);
  CHECK(rg.curves.size() == 3);
  CHECK(rg.l_p == 2.8);
  CHECK(rg.improved_l_p == rg.l_p);
  CHECK(rg.flips_tried == 0);
  CHECK(rg.l_p >= systole(g2).length);
  const std::string js = bers_report_json(rg);
  CHECK(js.find("upper_bound_only") != std::string::npos);
  CHECK(js.find("\"l_p\"") != std::string::npos);
}

TEST_CASE("spectra: CSV serialization") {
  const GeodesicSpectrum spec = enumerate_geodesics(modular_torus(), 4.0);
  std::ostringstream os;
  write_geodesics_csv(spec, os);
  const std::string text = os.str();
  CHECK(text.rfind("word,trace,length,primitive\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == spec.classes.size() + 1);

  const SimpleSpectrum tree = trace_tree(modular_torus(), 8.0);
  std::ostringstream os2;
  write_spectrum_csv(tree, os2);
  CHECK(os2.str().rfind("slope_p,slope_q,trace,length\n", 0) == 0);
}

TEST_CASE("spectra: cusped full enumeration reports its word cap") {
  // Parabolic commutator powers keep traces bounded, so the cusped torus
  // can never certify completeness inside a finite word ball; the honest
  // status is word_cap_reached, with the classes themselves still correct.
  const GeodesicSpectrum spec = enumerate_geodesics(modular_torus(), 4.0);
  CHECK(spec.status == "word_cap_reached");
  // A compact torus certifies completeness.
  const HolonomyRep compact =
      holonomy(torus_graph(), torus_fn(2.2, 0.4, 0.7));
  CHECK(enumerate_geodesics(compact, 4.0).status == "complete");
}
