#include "geowb/pants_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace geowb {

void PantsGraph::validate() const {
  if (n_pants <= 0)
    throw std::invalid_argument("PantsGraph: need at least one pants node");
  std::vector<char> used(static_cast<size_t>(n_pants) * 3, 0);
  auto claim = [&](int node, int slot) {
    if (node < 0 || node >= n_pants)
      throw std::invalid_argument("PantsGraph: node index out of range");
    if (slot < 0 || slot > 2)
      throw std::invalid_argument("PantsGraph: slot index out of range");
    char& u = used[static_cast<size_t>(node) * 3 + slot];
    if (u) throw std::invalid_argument("PantsGraph: slot glued twice");
    u = 1;
  };
  for (const Gluing& g : gluings) {
    if (g.node_a == g.node_b && g.slot_a == g.slot_b)
      throw std::invalid_argument("PantsGraph: cannot glue a slot to itself");
    claim(g.node_a, g.slot_a);
    claim(g.node_b, g.slot_b);
  }

  // Connectivity over gluing edges.
  std::vector<char> seen(n_pants, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const Gluing& g : gluings) {
      for (const int w : {g.node_a, g.node_b}) {
        if ((g.node_a == u || g.node_b == u) && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::invalid_argument("PantsGraph: graph is disconnected");

  // chi = -n_pants = 2 - 2g - n requires n_pants + n even.
  if ((n_pants + n_boundary()) % 2 != 0)
    throw std::invalid_argument("PantsGraph: signature has non-integral genus");
  if (genus() < 0) throw std::invalid_argument("PantsGraph: negative genus");
}

bool PantsGraph::slot_glued(int node, int slot) const {
  for (const Gluing& g : gluings) {
    if ((g.node_a == node && g.slot_a == slot) ||
        (g.node_b == node && g.slot_b == slot))
      return true;
  }
  return false;
}

std::vector<std::pair<int, int>> PantsGraph::boundary_slots() const {
  std::vector<std::pair<int, int>> out;
  for (int node = 0; node < n_pants; ++node)
    for (int slot = 0; slot < 3; ++slot)
      if (!slot_glued(node, slot)) out.emplace_back(node, slot);
  return out;
}

int PantsGraph::genus() const { return (2 + n_pants - n_boundary()) / 2; }

int PantsGraph::n_boundary() const {
  return 3 * n_pants - 2 * static_cast<int>(gluings.size());
}

void validate_fn(const PantsGraph& graph, const FNCoordinates& fn) {
  graph.validate();
  if (fn.lengths.size() != graph.gluings.size() ||
      fn.twists.size() != graph.gluings.size())
    throw std::invalid_argument("FNCoordinates: one length and twist per gluing");
  for (const Length l : fn.lengths)
    if (!(l > 0.0))
      throw std::invalid_argument("FNCoordinates: interior lengths must be > 0");
  if (static_cast<int>(fn.boundary_lengths.size()) != graph.n_boundary())
    throw std::invalid_argument("FNCoordinates: one length per boundary slot");
  for (const Length b : fn.boundary_lengths)
    if (!(b >= 0.0))
      throw std::invalid_argument("FNCoordinates: boundary lengths must be >= 0");
}

std::vector<int> thin_curves(const FNCoordinates& fn) {
  std::vector<int> out;
  for (size_t i = 0; i < fn.lengths.size(); ++i)
    if (fn.lengths[i] < 1e-6) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace geowb
