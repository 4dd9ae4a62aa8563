#include "geowb/trace_tree.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "geowb/constants.hpp"
#include "geowb/format.hpp"
#include "geowb/threads.hpp"

namespace geowb {

namespace {

// Relative slack used when testing for a strict decrease during descent, so
// that near-degenerate triples (x*y == 2z up to rounding) terminate.
constexpr double kDescentSlack = 1e-13;

// Padding factor on the pruning threshold: a branch survives slightly past
// the cutoff trace so that rounding inside the trace recursion can never
// drop an entry whose true trace is just below the cutoff.
constexpr double kPrunePad = 1e-9;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::runtime_error("trace_tree: slope coordinate overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::runtime_error("trace_tree: basis change overflow");
  return r;
}

struct DescentState {
  double x, y, z;
  std::int64_t u[2][2] = {{1, 0}, {0, 1}};

  // New basis (A*B, A^-1): traces cycle (x,y,z) -> (z,x,y); a slope (p,q) in
  // the new basis has old-basis coordinates (p - q, p).
  void rot() {
    const double t = z;
    z = y;
    y = x;
    x = t;
    for (auto& row : u) {
      const std::int64_t c0 = checked_add(row[0], row[1]);
      const std::int64_t c1 = -row[0];
      row[0] = c0;
      row[1] = c1;
    }
  }

  // New basis (A, B^-1): z -> x*y - z, second slope coordinate negates.
  void flip_z() {
    z = x * y - z;
    u[0][1] = -u[0][1];
    u[1][1] = -u[1][1];
  }
};

struct WalkNode {
  std::int64_t s1p, s1q, s2p, s2q;
  double u, v, w;
};

}  // namespace

MinimalTriple minimal_triple(const TraceTriple& seed) {
  const TraceTriple c = canonical_triple(seed);
  DescentState st{c.x, c.y, c.z};

  // Flip whichever coordinate the mediant relation strictly decreases until
  // the triple is acute. Each flip lowers the coordinate sum, so this stops.
  for (int iter = 0;; ++iter) {
    if (iter > 100000)
      throw std::runtime_error("minimal_triple: descent failed to terminate");
    if (st.x * st.y < 2.0 * st.z * (1.0 - kDescentSlack)) {
      st.flip_z();
    } else if (st.y * st.z < 2.0 * st.x * (1.0 - kDescentSlack)) {
      st.rot();
      st.rot();
      st.flip_z();
    } else if (st.z * st.x < 2.0 * st.y * (1.0 - kDescentSlack)) {
      st.rot();
      st.flip_z();
    } else {
      break;
    }
  }

  // Rotate the largest trace into the z slot; monotone growth along both
  // mediant trees needs z >= max(x, y) at the root.
  if (st.x >= st.y && st.x >= st.z) {
    st.rot();
    st.rot();
  } else if (st.y >= st.z) {
    st.rot();
  }

  MinimalTriple out;
  out.triple = TraceTriple{st.x, st.y, st.z};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.basis[i][j] = st.u[i][j];
  return out;
}

namespace {

Slope original_slope(const MinimalTriple& m, std::int64_t p, std::int64_t q) {
  const std::int64_t op =
      checked_add(checked_mul(m.basis[0][0], p), checked_mul(m.basis[0][1], q));
  const std::int64_t oq =
      checked_add(checked_mul(m.basis[1][0], p), checked_mul(m.basis[1][1], q));
  return canonical_slope(op, oq);
}

void walk_tree(const MinimalTriple& m, WalkNode root, double trace_cutoff,
               std::vector<SimpleEntry>& out) {
  const double padded = trace_cutoff * (1.0 + kPrunePad);
  std::vector<WalkNode> stack{root};
  while (!stack.empty()) {
    const WalkNode n = stack.back();
    stack.pop_back();
    // Negated comparison so non-finite traces (overflowed branches) prune.
    if (!(n.w <= padded)) continue;
    const std::int64_t mp = checked_add(n.s1p, n.s2p);
    const std::int64_t mq = checked_add(n.s1q, n.s2q);
    if (n.w <= trace_cutoff)
      out.push_back(SimpleEntry{original_slope(m, mp, mq), n.w,
                                trace_to_length(n.w)});
    stack.push_back(WalkNode{n.s1p, n.s1q, mp, mq, n.u, n.w, n.u * n.w - n.v});
    stack.push_back(WalkNode{mp, mq, n.s2p, n.s2q, n.w, n.v, n.w * n.v - n.u});
  }
}

}  // namespace

SimpleSpectrum trace_tree(const TraceTriple& seed, Length cutoff) {
  const MinimalTriple m = minimal_triple(seed);
  const double T = length_to_trace(cutoff);

  SimpleSpectrum spec;
  spec.cutoff = cutoff;
  if (m.triple.x <= T)
    spec.entries.push_back(SimpleEntry{original_slope(m, 1, 0), m.triple.x,
                                       trace_to_length(m.triple.x)});
  if (m.triple.y <= T)
    spec.entries.push_back(SimpleEntry{original_slope(m, 0, 1), m.triple.y,
                                       trace_to_length(m.triple.y)});

  // Tree of slopes p,q >= 1 rooted at the mediant of (1,0) and (0,1), and
  // its mirror rooted at the mediant of (1,0) and (0,-1). Together with the
  // two basis slopes these cover every unoriented primitive class once.
  std::deque<WalkNode> frontier{
      WalkNode{1, 0, 0, 1, m.triple.x, m.triple.y, m.triple.z},
      WalkNode{1, 0, 0, -1, m.triple.x, m.triple.y,
               m.triple.x * m.triple.y - m.triple.z}};

  const std::size_t workers = worker_count();
  if (workers > 1) {
    // Peel a frontier of independent branches breadth-first, recording the
    // mediants encountered along the way, then walk each branch in parallel.
    const double padded = T * (1.0 + kPrunePad);
    const std::size_t target = 8 * workers;
    while (!frontier.empty() && frontier.size() < target) {
      const WalkNode n = frontier.front();
      frontier.pop_front();
      if (!(n.w <= padded)) continue;
      const std::int64_t mp = checked_add(n.s1p, n.s2p);
      const std::int64_t mq = checked_add(n.s1q, n.s2q);
      if (n.w <= T)
        spec.entries.push_back(SimpleEntry{original_slope(m, mp, mq), n.w,
                                           trace_to_length(n.w)});
      frontier.push_back(
          WalkNode{n.s1p, n.s1q, mp, mq, n.u, n.w, n.u * n.w - n.v});
      frontier.push_back(
          WalkNode{mp, mq, n.s2p, n.s2q, n.w, n.v, n.w * n.v - n.u});
    }
  }

  if (workers > 1 && frontier.size() > 1) {
    const std::vector<WalkNode> branches(frontier.begin(), frontier.end());
    std::vector<std::future<std::vector<SimpleEntry>>> jobs;
    jobs.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      jobs.push_back(std::async(std::launch::async, [&m, &branches, t, workers,
                                                     T]() {
        std::vector<SimpleEntry> part;
        for (std::size_t i = t; i < branches.size(); i += workers)
          walk_tree(m, branches[i], T, part);
        return part;
      }));
    }
    for (auto& job : jobs) {
      const std::vector<SimpleEntry> part = job.get();
      spec.entries.insert(spec.entries.end(), part.begin(), part.end());
    }
  } else {
    for (const WalkNode& n : frontier) walk_tree(m, n, T, spec.entries);
  }

  std::sort(spec.entries.begin(), spec.entries.end(),
            [](const SimpleEntry& a, const SimpleEntry& b) {
              if (a.length != b.length) return a.length < b.length;
              if (a.slope.p != b.slope.p) return a.slope.p < b.slope.p;
              return a.slope.q < b.slope.q;
            });
  return spec;
}

SimpleSpectrum trace_tree(const HolonomyRep& rep, Length cutoff) {
  return trace_tree(torus_traces(rep), cutoff);
}

TraceTriple torus_traces(const HolonomyRep& rep) {
  if (rep.preset != "torus")
    throw std::invalid_argument("torus_traces: representation is not a torus preset");
  const Isometry& a = rep.gens[0];
  const Isometry& b = rep.gens[1];
  return TraceTriple{a.trace(), b.trace(), (a * b).trace()};
}

void write_spectrum_csv(const SimpleSpectrum& spectrum, std::ostream& out) {
  out << "slope_p,slope_q,trace,length\n";
  for (const SimpleEntry& e : spectrum.entries) {
    out << format_int(e.slope.p) << ',' << format_int(e.slope.q) << ','
        << format_double(e.trace) << ',' << format_double(e.length) << '\n';
  }
}

}  // namespace geowb
