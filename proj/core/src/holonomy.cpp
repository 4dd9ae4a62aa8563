#include "geowb/holonomy.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "geowb/constants.hpp"
#include "geowb/geodesic.hpp"
#include "geowb/pants.hpp"

namespace geowb {

namespace {

Isometry vert_translation(double s) {
  return Isometry{std::exp(s / 2.0), 0.0, 0.0, std::exp(-s / 2.0)};
}

// z -> -1/z: maps the upward vertical axis to itself reversed, fixes i,
// and swaps the two half-planes.
const Isometry kHalfTurn{0.0, -1.0, 1.0, 0.0};

// The marked perpendicular foot of a glued slot. Distinct nodes use the
// foot toward the cyclically next slot; a self-gluing uses the feet on the
// seam joining the two glued slots, so twist 0 closes that seam.
std::complex<double> marked_foot(const PantsGeometry& pg, int slot,
                                 int partner_slot, bool self) {
  if (!self || partner_slot == (slot + 1) % 3) return pg.cuff[slot].foot_next;
  return pg.cuff[slot].foot_prev;
}

// Maps (axis, foot) to ((0, infinity), i).
Isometry slot_normalizer(const PantsGeometry& pg, int slot,
                         std::complex<double> foot) {
  const Isometry m = normalizer_to_vertical(pg.cuff[slot].axis);
  const std::complex<double> w = m.apply(foot);
  if (!(w.imag() > 0.0) || std::fabs(w.real()) > 1e-8 * w.imag())
    throw std::runtime_error("holonomy: marked foot is not on the cuff axis");
  return vert_translation(-std::log(w.imag())) * m;
}

}  // namespace

HolonomyRep holonomy(const PantsGraph& graph, const FNCoordinates& fn) {
  validate_fn(graph, fn);
  const int n = graph.n_pants;
  const size_t m = graph.gluings.size();
  const auto bslots = graph.boundary_slots();

  // Slot lengths: interior curves from fn.lengths, free slots from
  // fn.boundary_lengths (sorted slot order).
  std::vector<std::array<Length, 3>> slot_len(n, {0.0, 0.0, 0.0});
  for (size_t i = 0; i < m; ++i) {
    const Gluing& g = graph.gluings[i];
    slot_len[g.node_a][g.slot_a] = fn.lengths[i];
    slot_len[g.node_b][g.slot_b] = fn.lengths[i];
  }
  for (size_t i = 0; i < bslots.size(); ++i)
    slot_len[bslots[i].first][bslots[i].second] = fn.boundary_lengths[i];

  std::vector<PantsGeometry> pants;
  pants.reserve(n);
  for (int p = 0; p < n; ++p)
    pants.push_back(build_pants(slot_len[p][0], slot_len[p][1], slot_len[p][2]));

  // Alignment of each gluing, mapping the b-side local frame into the
  // a-side local frame: the glued cuffs share their axis with opposite
  // orientations (the two pants lie on opposite sides), and the twist
  // displaces the marked feet by tau along the curve.
  std::vector<Isometry> align(m);
  for (size_t i = 0; i < m; ++i) {
    const Gluing& g = graph.gluings[i];
    const bool self = g.node_a == g.node_b;
    const PantsGeometry& pa = pants[g.node_a];
    const PantsGeometry& pb = pants[g.node_b];
    const Isometry na =
        slot_normalizer(pa, g.slot_a, marked_foot(pa, g.slot_a, g.slot_b, self));
    const Isometry nb =
        slot_normalizer(pb, g.slot_b, marked_foot(pb, g.slot_b, g.slot_a, self));
    align[i] = na.inverse() * vert_translation(fn.twists[i]) * kHalfTurn * nb;
  }

  // Place the nodes along a breadth-first spanning tree.
  std::vector<Isometry> frame(n);
  std::vector<char> placed(n, 0);
  std::vector<char> is_tree(m, 0);
  placed[0] = 1;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int u = queue[qi];
    for (size_t i = 0; i < m; ++i) {
      const Gluing& g = graph.gluings[i];
      if (g.node_a == g.node_b) continue;
      int other;
      bool from_a;
      if (g.node_a == u && !placed[g.node_b]) {
        other = g.node_b;
        from_a = true;
      } else if (g.node_b == u && !placed[g.node_a]) {
        other = g.node_a;
        from_a = false;
      } else {
        continue;
      }
      is_tree[i] = 1;
      placed[other] = 1;
      frame[other] = from_a ? frame[u] * align[i] : frame[u] * align[i].inverse();
      queue.push_back(other);
    }
  }

  auto global = [&](int node, int slot) {
    return frame[node] * pants[node].cuff[slot].holonomy * frame[node].inverse();
  };

  // Stable letters for the non-tree gluings, in gluing order.
  std::vector<int> stable_of(m, -1);
  std::vector<Isometry> stables;
  for (size_t i = 0; i < m; ++i) {
    if (is_tree[i]) continue;
    const Gluing& g = graph.gluings[i];
    stable_of[i] = static_cast<int>(stables.size());
    stables.push_back(frame[g.node_a] * align[i] * frame[g.node_b].inverse());
  }

  double residual = 0.0;
  for (int p = 0; p < n; ++p) {
    const Isometry prod = global(p, 0) * global(p, 1) * global(p, 2);
    residual = std::max(residual, dist_to_identity(prod));
  }
  for (size_t i = 0; i < m; ++i) {
    const Gluing& g = graph.gluings[i];
    const Isometry ya = global(g.node_a, g.slot_a);
    const Isometry zb = global(g.node_b, g.slot_b);
    const Isometry defect =
        is_tree[i] ? ya * zb
                   : stables[stable_of[i]] * zb *
                         stables[stable_of[i]].inverse() * ya;
    residual = std::max(residual, dist_to_identity(defect));
  }

  HolonomyRep rep;
  rep.genus = graph.genus();
  rep.n_boundary = graph.n_boundary();
  rep.curve_lengths = fn.lengths;
  rep.boundary_lengths = fn.boundary_lengths;

  const bool is_torus = n == 1 && m == 1;
  const bool is_genus2 =
      n == 2 && m == 3 &&
      [&] {
        for (int k = 0; k < 3; ++k) {
          const Gluing& g = graph.gluings[k];
          if (g.node_a != 0 || g.node_b != 1 || g.slot_a != k || g.slot_b != k)
            return false;
        }
        return true;
      }();

  if (is_torus) {
    rep.preset = "torus";
    const Gluing& g = graph.gluings[0];
    rep.gens = {global(g.node_a, g.slot_a), stables[0]};
    rep.names = "ab";
    // Boundary slot m: X_m = X_{m+2}^-1 X_{m+1}^-1 with the glued pair
    // substituted (a-side image a, b-side image b^-1 a^-1 b).
    const int bslot = bslots[0].second;
    rep.boundary_words = {g.slot_a == (bslot + 1) % 3 ? "BabA" : "ABab"};
  } else if (is_genus2) {
    rep.preset = "genus2";
    rep.gens = {global(0, 1), global(0, 2), stables[stable_of[1]],
                stables[stable_of[2]]};
    rep.names = "abcd";
    rep.relators = {"abCAcDBd"};
  } else {
    rep.preset = "generic";
    // One letter per interior curve (a-side image), stable letter, and
    // boundary slot, in that order.
    const size_t count = m + stables.size() + bslots.size();
    if (count > 26)
      throw std::invalid_argument("holonomy: more than 26 generators");
    std::vector<int> curve_gen(m), bnd_gen(bslots.size());
    for (size_t i = 0; i < m; ++i) {
      curve_gen[i] = static_cast<int>(rep.gens.size());
      rep.gens.push_back(global(graph.gluings[i].node_a, graph.gluings[i].slot_a));
    }
    const int stable_base = static_cast<int>(rep.gens.size());
    for (const Isometry& t : stables) rep.gens.push_back(t);
    for (size_t i = 0; i < bslots.size(); ++i) {
      bnd_gen[i] = static_cast<int>(rep.gens.size());
      rep.gens.push_back(global(bslots[i].first, bslots[i].second));
    }
    for (size_t i = 0; i < rep.gens.size(); ++i)
      rep.names.push_back(static_cast<char>('a' + i));

    // One relator per pants: the slot images in order spell X0 X1 X2.
    for (int p = 0; p < n; ++p) {
      std::string rel;
      for (int k = 0; k < 3; ++k) {
        bool emitted = false;
        for (size_t i = 0; i < m && !emitted; ++i) {
          const Gluing& g = graph.gluings[i];
          const char c = rep.names[curve_gen[i]];
          if (g.node_a == p && g.slot_a == k) {
            rel.push_back(c);
            emitted = true;
          } else if (g.node_b == p && g.slot_b == k) {
            const char cu = static_cast<char>(std::toupper(c));
            if (is_tree[i]) {
              rel.push_back(cu);
            } else {
              const char s = rep.names[stable_base + stable_of[i]];
              rel.push_back(static_cast<char>(std::toupper(s)));
              rel.push_back(cu);
              rel.push_back(s);
            }
            emitted = true;
          }
        }
        if (!emitted) {
          for (size_t i = 0; i < bslots.size(); ++i)
            if (bslots[i].first == p && bslots[i].second == k)
              rel.push_back(rep.names[bnd_gen[i]]);
        }
      }
      rep.relators.push_back(rel);
    }
    for (size_t i = 0; i < bslots.size(); ++i)
      rep.boundary_words.push_back(std::string(1, rep.names[bnd_gen[i]]));
  }

  for (const std::string& rel : rep.relators)
    residual = std::max(residual, dist_to_identity(word_image(rep, rel)));
  for (size_t i = 0; i < bslots.size(); ++i) {
    const Isometry direct = global(bslots[i].first, bslots[i].second);
    residual = std::max(residual, dist_to_identity(word_image(
                                      rep, rep.boundary_words[i]) *
                                  direct.inverse()));
  }
  rep.relator_residual = residual;
  if (residual > tol_relator)
    throw std::runtime_error("holonomy: relator residual exceeds tolerance");
  return rep;
}

Isometry word_image(const HolonomyRep& rep, const std::string& word) {
  if (word.empty()) throw std::invalid_argument("word_image: empty word");
  Isometry out = Isometry::identity();
  for (const char ch : word) {
    const char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const size_t idx = rep.names.find(low);
    if (idx == std::string::npos)
      throw std::invalid_argument("word_image: unknown generator letter");
    out = out * (std::islower(static_cast<unsigned char>(ch))
                     ? rep.gens[idx]
                     : rep.gens[idx].inverse());
  }
  return out;
}

Length word_length(const HolonomyRep& rep, const std::string& word) {
  if (word.empty()) throw std::invalid_argument("word_length: empty word");
  const size_t len = word.size();
  if (len >= 2) {
    for (size_t i = 0; i < len; ++i) {
      const char x = word[i], y = word[(i + 1) % len];
      if (x != y &&
          std::tolower(static_cast<unsigned char>(x)) ==
              std::tolower(static_cast<unsigned char>(y)))
        throw std::invalid_argument("word_length: word not cyclically reduced");
    }
  }
  const Isometry img = word_image(rep, word);
  if (classify(img) == IsomClass::Elliptic)
    throw std::domain_error("word_length: elliptic word image");
  return trace_to_length(img.trace());
}

PantsGraph torus_graph() {
  PantsGraph g;
  g.n_pants = 1;
  g.gluings = {{0, 0, 0, 1}};
  return g;
}

FNCoordinates torus_fn(Length l, double tau, Length boundary) {
  return FNCoordinates{{l}, {tau}, {boundary}};
}

PantsGraph genus2_graph() {
  PantsGraph g;
  g.n_pants = 2;
  g.gluings = {{0, 0, 1, 0}, {0, 1, 1, 1}, {0, 2, 1, 2}};
  return g;
}

FNCoordinates genus2_fn(Length l0, Length l1, Length l2, double tau0,
                        double tau1, double tau2) {
  return FNCoordinates{{l0, l1, l2}, {tau0, tau1, tau2}, {}};
}

HolonomyRep modular_torus() {
  const Length l = 2.0 * std::acosh(1.5);
  return holonomy(torus_graph(), torus_fn(l, l / 2.0, 0.0));
}

}  // namespace geowb
