#pragma once

// Pants-decomposition graphs and Fenchel-Nielsen coordinates.
//
// A surface of signature (g, n) is assembled from 2g-2+n pants along
// 3g-3+n interior curves; each pants node has three cuff slots (0,1,2).
// A gluing identifies two distinct slots (possibly of the same node);
// every unglued slot carries a boundary length (0 = cusp).

#include <utility>
#include <vector>

#include "geowb/hyptrig.hpp"

namespace geowb {

struct Gluing {
  int node_a = 0;
  int slot_a = 0;
  int node_b = 0;
  int slot_b = 0;
};

struct PantsGraph {
  int n_pants = 0;
  std::vector<Gluing> gluings;

  // Throws std::invalid_argument on malformed input: slot out of range,
  // a slot glued twice, a self-gluing of a slot to itself, a disconnected
  // graph, or a signature with non-integral genus.
  void validate() const;

  bool slot_glued(int node, int slot) const;

  // Unglued slots, sorted by (node, slot).
  std::vector<std::pair<int, int>> boundary_slots() const;

  // Signature: Euler characteristic 2-2g-n = -n_pants.
  int genus() const;
  int n_boundary() const;
};

struct FNCoordinates {
  // Per gluing, in graph order. Lengths must be strictly positive.
  std::vector<Length> lengths;
  // Twist in hyperbolic length units: displacement between the marked
  // perpendicular feet, positive toward the attracting end of the a-side
  // cuff generator. tau and tau + length differ by a full Dehn twist.
  std::vector<double> twists;
  // Per unglued slot, sorted by (node, slot); 0 = cusp.
  std::vector<Length> boundary_lengths;
};

// Throws std::invalid_argument if fn does not match the (valid) graph:
// wrong vector sizes, a non-positive interior length, or a negative
// boundary length.
void validate_fn(const PantsGraph& graph, const FNCoordinates& fn);

// Indices of interior curves shorter than 1e-6: legal but numerically
// delicate (thin part); callers may want to warn.
std::vector<int> thin_curves(const FNCoordinates& fn);

}  // namespace geowb
