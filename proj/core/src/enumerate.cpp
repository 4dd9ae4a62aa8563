#include "geowb/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "geowb/constants.hpp"
#include "geowb/format.hpp"
#include "geowb/isometry.hpp"
#include "geowb/threads.hpp"

namespace geowb {

namespace {

constexpr int kWordCap = 40;
// |trace| below 2 - this is a genuine elliptic (non-discrete input); traces
// in the band around 2 are parabolic-like and skipped silently.
constexpr double kEllipticSlack = 1e-6;
constexpr double kIdentityTol = 1e-6;
// Quantization grid for element identity; distinct elements of a discrete
// group in the explored balls are separated by far more than this.
constexpr double kElementQuantum = 1e-6;

const std::array<std::complex<double>, 3>& base_points() {
  static const std::array<std::complex<double>, 3> pts = {
      std::complex<double>(0.0, 1.0),
      std::complex<double>(0.5, std::sqrt(3.0) / 2.0),
      std::complex<double>(-0.5, std::sqrt(3.0) / 2.0)};
  return pts;
}

double min_displacement(const Isometry& M) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& z : base_points())
    best = std::min(best, hyp_dist(z, M.apply(z)));
  return best;
}

struct Letter {
  Isometry mat;
  char ch = '?';
};

std::vector<Letter> make_letters(const HolonomyRep& rep) {
  std::vector<Letter> letters;
  letters.reserve(2 * rep.gens.size());
  for (std::size_t i = 0; i < rep.gens.size(); ++i) {
    const char c = rep.names[i];
    letters.push_back(Letter{rep.gens[i], c});
    letters.push_back(Letter{rep.gens[i].inverse(),
                             static_cast<char>(std::toupper(static_cast<unsigned char>(c)))});
  }
  return letters;
}

struct MatKey {
  std::array<std::int64_t, 4> k;

  friend bool operator==(const MatKey&, const MatKey&) = default;
  friend bool operator<(const MatKey& a, const MatKey& b) { return a.k < b.k; }
};

struct MatKeyHash {
  std::size_t operator()(const MatKey& m) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const std::int64_t v : m.k) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

MatKey quantize(const Isometry& M) {
  std::array<double, 4> e{M.a, M.b, M.c, M.d};
  double sign = 1.0;
  for (const double v : e) {
    if (std::abs(v) > 1e-9) {
      sign = v < 0.0 ? -1.0 : 1.0;
      break;
    }
  }
  MatKey key{};
  for (int i = 0; i < 4; ++i)
    key.k[static_cast<std::size_t>(i)] =
        std::llround(sign * e[static_cast<std::size_t>(i)] / kElementQuantum);
  return key;
}

struct Candidate {
  std::string word;
  Isometry mat;
  Length length = 0.0;
};

struct SearchParams {
  const std::vector<Letter>* letters = nullptr;
  Length cutoff = 0.0;
  double prune_radius = 0.0;
  bool dedupe_elements = false;  // needed when the group is not free
};

struct BranchResult {
  std::vector<Candidate> candidates;
  Length min_length = std::numeric_limits<double>::infinity();
  bool cap_hit = false;
};

using SeenSet = std::unordered_set<MatKey, MatKeyHash>;

// Examine the element reached by `word`, record it if it is a geodesic class
// candidate within the cutoff, and recurse while the displacement bound
// allows. `collect` switches candidate bookkeeping off for the fast
// min-length path.
void visit(const SearchParams& p, const Isometry& M, std::string& word,
           std::size_t last, BranchResult& out, SeenSet* seen, bool collect) {
  if (seen != nullptr && !seen->insert(quantize(M)).second) return;

  const double tr = std::abs(M.trace());
  if (dist_to_identity(M) >= kIdentityTol) {
    if (tr < 2.0 - kEllipticSlack)
      throw std::domain_error("enumerate_geodesics: elliptic word '" + word +
                              "' (non-discrete representation)");
    if (tr >= 2.0 + tol_trace) {
      const Length l = trace_to_length(tr);
      if (l <= p.cutoff) {
        out.min_length = std::min(out.min_length, l);
        if (collect) out.candidates.push_back(Candidate{word, M, l});
      }
    }
  }

  if (min_displacement(M) > p.prune_radius) return;
  if (word.size() >= static_cast<std::size_t>(kWordCap)) {
    out.cap_hit = true;
    return;
  }
  for (std::size_t k = 0; k < p.letters->size(); ++k) {
    if (k == (last ^ 1)) continue;  // no immediate cancellation
    word.push_back((*p.letters)[k].ch);
    visit(p, M * (*p.letters)[k].mat, word, k, out, seen, collect);
    word.pop_back();
  }
}

// Walk the whole search tree, sharding depth-2 subtrees across workers.
BranchResult walk_all(const HolonomyRep& rep, Length cutoff, double margin,
                      bool collect) {
  if (cutoff <= 0.0)
    throw std::invalid_argument("enumerate_geodesics: cutoff must be positive");
  if (margin <= 0.0)
    throw std::invalid_argument("enumerate_geodesics: margin must be positive");
  for (const Isometry& g : rep.gens)
    if (std::abs(g.trace()) < 2.0 - kEllipticSlack)
      throw std::domain_error(
          "enumerate_geodesics: elliptic generator (degenerate representation)");

  const std::vector<Letter> letters = make_letters(rep);
  double max_step = 0.0;
  for (const Letter& l : letters)
    for (const auto& z : base_points())
      max_step = std::max(max_step, hyp_dist(z, l.mat.apply(z)));

  SearchParams p;
  p.letters = &letters;
  p.cutoff = cutoff;
  p.prune_radius =
      2.0 * std::asinh(std::sinh(cutoff / 2.0) * std::cosh(margin)) + max_step;
  p.dedupe_elements = !rep.relators.empty();

  // Depth <= 1 sequentially; surviving depth-2 nodes become parallel jobs.
  BranchResult out;
  struct Job {
    Isometry mat;
    std::string word;
    std::size_t last;
  };
  std::vector<Job> jobs;
  SeenSet root_seen;
  if (p.dedupe_elements) root_seen.insert(quantize(Isometry::identity()));

  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Isometry M = letters[i].mat;
    std::string w(1, letters[i].ch);
    if (p.dedupe_elements && !root_seen.insert(quantize(M)).second) continue;
    const double tr = std::abs(M.trace());
    if (dist_to_identity(M) >= kIdentityTol && tr >= 2.0 + tol_trace) {
      const Length l = trace_to_length(tr);
      if (l <= cutoff) {
        out.min_length = std::min(out.min_length, l);
        if (collect) out.candidates.push_back(Candidate{w, M, l});
      }
    }
    if (min_displacement(M) > p.prune_radius) continue;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k == (i ^ 1)) continue;
      jobs.push_back(Job{M * letters[k].mat, w + letters[k].ch, k});
    }
  }

  const std::size_t workers = worker_count();
  if (workers > 1 && jobs.size() > 1) {
    std::vector<std::future<BranchResult>> futs;
    futs.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      futs.push_back(std::async(std::launch::async, [&, t]() {
        BranchResult local;
        for (std::size_t idx = t; idx < jobs.size(); idx += workers) {
          // A fresh seen-set per job keeps the explored set independent of
          // scheduling; cross-job duplicates collapse in the class map.
          SeenSet seen;
          std::string w = jobs[idx].word;
          visit(p, jobs[idx].mat, w, jobs[idx].last, local,
                p.dedupe_elements ? &seen : nullptr, collect);
        }
        return local;
      }));
    }
    for (auto& f : futs) {
      BranchResult part = f.get();
      out.cap_hit = out.cap_hit || part.cap_hit;
      out.min_length = std::min(out.min_length, part.min_length);
      out.candidates.insert(out.candidates.end(),
                            std::make_move_iterator(part.candidates.begin()),
                            std::make_move_iterator(part.candidates.end()));
    }
  } else {
    for (const Job& job : jobs) {
      SeenSet seen;
      std::string w = job.word;
      visit(p, job.mat, w, job.last, out, p.dedupe_elements ? &seen : nullptr,
            collect);
    }
  }
  return out;
}

bool word_is_power(const std::string& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d * 2 <= n; ++d) {
    if (n % d != 0) continue;
    bool rep = true;
    for (std::size_t i = d; i < n && rep; ++i) rep = w[i] == w[i - d];
    if (rep) return true;
  }
  return false;
}

}  // namespace

std::string invert_word(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const unsigned char c = static_cast<unsigned char>(*it);
    out.push_back(static_cast<char>(std::islower(c) ? std::toupper(c)
                                                    : std::tolower(c)));
  }
  return out;
}

namespace {
bool inverse_letters(char x, char y) {
  return x != y && std::tolower(static_cast<unsigned char>(x)) ==
                       std::tolower(static_cast<unsigned char>(y));
}

// Word order used for canonical forms: 'a' < 'A' < 'b' < 'B' < ...
int letter_rank(char c) {
  const unsigned char u = static_cast<unsigned char>(c);
  return 2 * (std::tolower(u) - 'a') + (std::isupper(u) ? 1 : 0);
}

bool word_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  return false;
}
}  // namespace

std::string cyclic_reduce(const std::string& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && inverse_letters(w[lo], w[hi - 1])) {
    ++lo;
    --hi;
  }
  return w.substr(lo, hi - lo);
}

std::string canonical_cyclic(const std::string& w) {
  const std::string base = cyclic_reduce(w);
  if (base.empty()) return base;
  std::string best;
  for (const std::string& v : {base, invert_word(base)}) {
    const std::string doubled = v + v;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::string rot = doubled.substr(i, v.size());
      if (best.empty() || word_less(rot, best)) best = std::move(rot);
    }
  }
  return best;
}

namespace {

// --- conjugacy canonicalization by relator rewriting -----------------------
//
// A rotation rho of a relator (or its inverse) satisfies rho = st = 1 in the
// group, so replacing an occurrence of s by t^{-1} preserves the element;
// rotations and inversion preserve the unoriented conjugacy class. For the
// genus-2 preset the relator has all pieces of length 1 (metric small
// cancellation C'(1/8)), where this move set decides conjugacy of cyclically
// reduced words; enumerate_geodesics additionally verifies key invariance
// under generator conjugation at runtime, so any gap on other presentations
// surfaces as an error, never as a miscount.

std::string free_reduce(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (const char c : w) {
    if (!out.empty() && inverse_letters(out.back(), c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

struct RelatorMoves {
  // exactly-half substitutions: length-preserving
  std::vector<std::pair<std::string, std::string>> half;
  // more-than-half substitutions: strictly shorter replacement
  std::vector<std::pair<std::string, std::string>> shrink;
};

RelatorMoves build_moves(const std::vector<std::string>& relators) {
  RelatorMoves mv;
  for (const std::string& r0 : relators) {
    if (r0.empty()) continue;
    for (const std::string& r : {r0, invert_word(r0)}) {
      const std::size_t n = r.size();
      const std::string d = r + r;
      for (std::size_t rot = 0; rot < n; ++rot) {
        for (std::size_t ls = (n + 1) / 2; ls <= n; ++ls) {
          const std::string s = d.substr(rot, ls);
          const std::string repl = invert_word(d.substr(rot + ls, n - ls));
          if (2 * ls == n)  // exactly half: same-length replacement
            mv.half.emplace_back(s, repl);
          else
            mv.shrink.emplace_back(s, repl);
        }
      }
    }
  }
  auto tidy = [](std::vector<std::pair<std::string, std::string>>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(mv.half);
  tidy(mv.shrink);
  return mv;
}

// Cyclically reduce and apply length-decreasing relator substitutions until
// none applies.
std::string dehn_reduce_cyclic(std::string w, const RelatorMoves& mv) {
  for (;;) {
    w = cyclic_reduce(free_reduce(w));
    if (w.empty()) return w;
    bool changed = false;
    const std::string d = w + w;
    for (const auto& [s, repl] : mv.shrink) {
      if (s.size() > w.size()) continue;
      const std::size_t pos = d.find(s);
      if (pos != std::string::npos && pos < w.size()) {
        w = repl + d.substr(pos + s.size(), w.size() - s.size());
        changed = true;
        break;
      }
    }
    if (!changed) return w;
  }
}

// Lexicographically least word reachable from w by rotations, inversion and
// half-relator substitutions (re-reducing after each); a strict length drop
// restarts the closure from the shorter word.
std::string word_class_key(std::string w, const RelatorMoves& mv) {
  w = dehn_reduce_cyclic(std::move(w), mv);
restart:
  std::set<std::string> seen;
  std::vector<std::string> queue;
  std::string best = w;
  auto push = [&](const std::string& v) {
    if (seen.insert(v).second) {
      if (word_less(v, best)) best = v;
      queue.push_back(v);
    }
  };
  push(w);
  while (!queue.empty()) {
    if (seen.size() > 20000)
      throw std::runtime_error(
          "enumerate_geodesics: conjugacy closure overflow");
    const std::string u = queue.back();
    queue.pop_back();
    std::vector<std::string> next;
    if (u.size() >= 2) next.push_back(u.substr(1) + u.front());
    next.push_back(invert_word(u));
    const std::string d = u + u;
    for (const auto& [s, repl] : mv.half) {
      if (s.size() > u.size()) continue;
      for (std::size_t pos = d.find(s);
           pos != std::string::npos && pos < u.size(); pos = d.find(s, pos + 1))
        next.push_back(repl + d.substr(pos + s.size(), u.size() - s.size()));
    }
    for (std::string& v : next) {
      v = dehn_reduce_cyclic(std::move(v), mv);
      if (v.size() < w.size()) {
        w = std::move(v);
        goto restart;
      }
      push(v);
    }
  }
  return best;
}

std::string repeat_word(const std::string& w, int k) {
  std::string out;
  out.reserve(w.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out += w;
  return out;
}

}  // namespace

GeodesicSpectrum enumerate_geodesics(const HolonomyRep& rep, Length cutoff,
                                     double margin) {
  BranchResult raw = walk_all(rep, cutoff, margin, /*collect=*/true);

  struct Rec {
    double trace = 0.0;
    Length length = 0.0;
  };
  // The key is the canonical word of the class and doubles as its label.
  std::map<std::string, Rec> classes;
  const bool free_group = rep.relators.empty();
  const RelatorMoves moves =
      free_group ? RelatorMoves{} : build_moves(rep.relators);
  std::unordered_map<MatKey, std::string, MatKeyHash> element_key;

  for (const Candidate& c : raw.candidates) {
    std::string key;
    if (free_group) {
      key = canonical_cyclic(c.word);
    } else {
      const MatKey mk = quantize(c.mat);
      const auto it = element_key.find(mk);
      if (it != element_key.end()) {
        key = it->second;
      } else {
        key = word_class_key(c.word, moves);
        element_key.emplace(mk, key);
      }
    }
    classes.try_emplace(key);
  }

  // Evaluate each class at its canonical word so the reported trace and
  // length do not depend on which ball conjugate happened to be found first
  // (the candidate search only decides membership).
  for (auto it = classes.begin(); it != classes.end();) {
    const Isometry img = word_image(rep, it->first);
    it->second.trace = std::abs(img.trace());
    it->second.length = trace_to_length(it->second.trace);
    if (it->second.length > cutoff)
      it = classes.erase(it);
    else
      ++it;
  }

  if (!free_group) {
    // Runtime certificate of the move set: conjugating a canonical word by
    // any generator must not change its key.
    for (const auto& [key, rec] : classes) {
      for (const char g : rep.names) {
        const char gu =
            static_cast<char>(std::toupper(static_cast<unsigned char>(g)));
        for (const auto& [pre, post] : {std::pair{g, gu}, std::pair{gu, g}}) {
          if (word_class_key(pre + key + post, moves) != key)
            throw std::runtime_error(
                "enumerate_geodesics: conjugacy canonicalization failed "
                "invariance on word '" +
                key + "'");
        }
      }
    }
  }

  GeodesicSpectrum spec;
  spec.cutoff = cutoff;
  spec.margin = margin;
  spec.word_cap = kWordCap;
  spec.status = raw.cap_hit ? "word_cap_reached" : "complete";
  spec.classes.reserve(classes.size());
  for (const auto& [key, rec] : classes) {
    GeodesicClass gc;
    gc.word = key;
    gc.trace = rec.trace;
    gc.length = rec.length;
    gc.primitive = true;
    spec.classes.push_back(gc);
  }

  // Primitivity: a class is a proper power iff some shorter class taken to
  // the k-th power lands in it.
  if (free_group) {
    for (GeodesicClass& gc : spec.classes)
      gc.primitive = !word_is_power(gc.word);
  } else {
    for (GeodesicClass& gc : spec.classes) {
      for (const GeodesicClass& root : spec.classes) {
        if (root.length >= gc.length - 1e-9) continue;
        const double ratio = gc.length / root.length;
        const int k = static_cast<int>(std::lround(ratio));
        if (k < 2 || std::abs(ratio - k) > 1e-6 * std::max(1.0, ratio))
          continue;
        if (word_class_key(repeat_word(root.word, k), moves) == gc.word) {
          gc.primitive = false;
          break;
        }
      }
    }
  }

  std::sort(spec.classes.begin(), spec.classes.end(),
            [](const GeodesicClass& a, const GeodesicClass& b) {
              if (a.length != b.length) return a.length < b.length;
              return word_less(a.word, b.word);
            });
  return spec;
}

Length shortest_geodesic_length(const HolonomyRep& rep, Length cutoff,
                                double margin) {
  return walk_all(rep, cutoff, margin, /*collect=*/false).min_length;
}

void write_geodesics_csv(const GeodesicSpectrum& spectrum, std::ostream& out) {
  out << "word,trace,length,primitive\n";
  for (const GeodesicClass& c : spectrum.classes) {
    out << c.word << ',' << format_double(c.trace) << ','
        << format_double(c.length) << ',' << (c.primitive ? '1' : '0') << '\n';
  }
}

}  // namespace geowb
