#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "geowb/holonomy.hpp"
#include "geowb/hyptrig.hpp"
#include "geowb/slope.hpp"

namespace geowb {

// One simple closed geodesic on a one-holed torus: its slope in the marked
// basis, the (positive) trace of its holonomy, and its length.
struct SimpleEntry {
  Slope slope;
  double trace = 0.0;
  Length length = 0.0;

  friend bool operator==(const SimpleEntry&, const SimpleEntry&) = default;
};

// Complete simple length spectrum up to a cutoff, sorted by length and then
// by slope (lexicographically) to break exact ties deterministically.
struct SimpleSpectrum {
  std::vector<SimpleEntry> entries;
  Length cutoff = 0.0;
};

// A trace triple reduced to its minimal (acute) representative together with
// the basis change that undoes the reduction: a slope with coordinates c in
// the minimal basis has coordinates basis * c in the original marked basis.
struct MinimalTriple {
  TraceTriple triple;
  std::int64_t basis[2][2] = {{1, 0}, {0, 1}};
};

// Reduce a valid triple to minimal form: all entries positive, acute
// (x*y >= 2z and cyclic permutations), and z the largest entry. Trace
// monotonicity along both mediant trees holds from such a root, which makes
// cutoff pruning exact. Throws like canonical_triple on invalid input.
MinimalTriple minimal_triple(const TraceTriple& seed);

// Enumerate every unoriented simple closed geodesic of length <= cutoff by
// walking the two mediant trees rooted at the minimal basis. Exact pruning:
// a branch is abandoned once its mediant trace exceeds the cutoff trace,
// which is valid because traces are monotone along branches from a minimal
// root. Slopes are reported in the basis of the seed triple.
SimpleSpectrum trace_tree(const TraceTriple& seed, Length cutoff);

// Same, seeded from a one-holed-torus holonomy representation.
SimpleSpectrum trace_tree(const HolonomyRep& rep, Length cutoff);

// Signed trace triple (tr a, tr b, tr ab) of a torus-preset representation.
// Throws std::invalid_argument for any other preset.
TraceTriple torus_traces(const HolonomyRep& rep);

// CSV with header slope_p,slope_q,trace,length; shortest round-trip floats.
void write_spectrum_csv(const SimpleSpectrum& spectrum, std::ostream& out);

}  // namespace geowb
