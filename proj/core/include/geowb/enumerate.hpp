#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "geowb/holonomy.hpp"
#include "geowb/hyptrig.hpp"

namespace geowb {

// One conjugacy class of closed geodesics. The stored word is cyclically
// reduced and minimal among all rotations of itself and of its inverse
// (for representations with relators it is the canonical form of the witness
// word found by the search, which need not be globally shortest).
struct GeodesicClass {
  std::string word;
  double trace = 0.0;  // |trace| of the holonomy
  Length length = 0.0;
  bool primitive = true;

  friend bool operator==(const GeodesicClass&, const GeodesicClass&) = default;
};

struct GeodesicSpectrum {
  std::vector<GeodesicClass> classes;  // sorted by (length, word)
  Length cutoff = 0.0;
  double margin = 0.0;
  int word_cap = 0;
  // "complete": every branch was closed by the displacement bound.
  // "word_cap_reached": some branch hit the word-length cap, so classes
  // whose shortest ball representative needs a longer word may be missing.
  std::string status;
};

// All conjugacy classes of closed geodesics of length <= cutoff, found by
// depth-first growth of reduced words, pruning a prefix once its minimal
// displacement over a three-point base set exceeds
//   2 arcsinh(sinh(cutoff/2) cosh(margin)) + one letter step.
// Words are capped at 40 letters; hitting the cap is reported in `status`,
// never silently. Throws std::invalid_argument for cutoff <= 0 or
// margin <= 0 and std::domain_error when the representation has an elliptic
// generator or an elliptic word is encountered (non-discrete input).
GeodesicSpectrum enumerate_geodesics(const HolonomyRep& rep, Length cutoff,
                                     double margin = 1.5);

// Minimum translation length among all nontrivial words in the same search
// ball (no class bookkeeping; the fast objective for optimizers). Returns
// +infinity when the ball contains no hyperbolic element.
Length shortest_geodesic_length(const HolonomyRep& rep, Length cutoff,
                                double margin = 1.5);

// Word utilities (exposed for tests and cross-module checks).
std::string invert_word(const std::string& w);
std::string cyclic_reduce(const std::string& w);
// Minimal rotation over the cyclic reduction of w and of its inverse.
std::string canonical_cyclic(const std::string& w);

// CSV with header word,trace,length,primitive.
void write_geodesics_csv(const GeodesicSpectrum& spectrum, std::ostream& out);

}  // namespace geowb
