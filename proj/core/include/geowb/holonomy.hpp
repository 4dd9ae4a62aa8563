#pragma once

// Holonomy representations of surface groups from Fenchel-Nielsen data.
//
// Each pants node is built in its own local frame by build_pants; a
// spanning tree of the gluing graph places the nodes in one global frame,
// and every non-tree gluing (self-gluings always) contributes a stable
// letter. Words are written over single-letter generator names, with the
// uppercase letter denoting the inverse (word "BabA" = b^-1 a b a^-1).
//
// Generating sets (fixed per shape, see README):
//   torus    - 1 pants, slots 0-1 self-glued: a = interior curve (a-side),
//              b = stable letter; free group, boundary word "BabA".
//   genus2   - 2 pants, gluings (0,k)-(1,k) for k = 0,1,2 in order:
//              a, b = interior curves 1 and 2 (a-side), c, d = their stable
//              letters; gluing 0 is the tree edge; relator "abCAcDBd".
//   generic  - any other graph: one generator per interior curve (a-side
//              image), per stable letter, and per boundary slot; one
//              relator per pants node.

#include <string>
#include <vector>

#include "geowb/isometry.hpp"
#include "geowb/pants_graph.hpp"

namespace geowb {

struct HolonomyRep {
  std::vector<Isometry> gens;       // generator images, global frame
  std::string names;                // names[i]: lowercase letter of gens[i]
  std::vector<std::string> relators;        // empty for free groups
  std::vector<std::string> boundary_words;  // per boundary slot, sorted
  std::vector<Length> boundary_lengths;     // 0 = cusp
  std::vector<Length> curve_lengths;        // per gluing
  double relator_residual = 0.0;    // max PSL defect over all relations
  int genus = 0;
  int n_boundary = 0;
  std::string preset;               // "torus", "genus2", or "generic"
};

// Compile FN coordinates on a pants graph to a holonomy representation.
// Throws std::invalid_argument for inconsistent input and
// std::runtime_error if a relation fails numerically (residual > 1e-8).
HolonomyRep holonomy(const PantsGraph& graph, const FNCoordinates& fn);

// Image of a word over the generator letters (uppercase = inverse).
// Throws std::invalid_argument for unknown letters or the empty word.
Isometry word_image(const HolonomyRep& rep, const std::string& word);

// Geodesic length of the free-homotopy class of a cyclically reduced word:
// trace_to_length of its image. Invariant under cyclic permutation and
// inversion. Throws std::invalid_argument if the word is empty or not
// cyclically reduced, std::domain_error if the image is elliptic.
Length word_length(const HolonomyRep& rep, const std::string& word);

// Standard shapes.
PantsGraph torus_graph();                 // slots 0-1 self-glued, slot 2 free
FNCoordinates torus_fn(Length l, double tau, Length boundary);
PantsGraph genus2_graph();                // theta graph, slots matched in order
FNCoordinates genus2_fn(Length l0, Length l1, Length l2, double tau0,
                        double tau1, double tau2);

// The square-tiled cusped torus: l = 2 acosh(3/2), half twist, cusp.
// Systole trace 3; the isometry group of this surface has order 12.
HolonomyRep modular_torus();

}  // namespace geowb
