#include "geowb/markov.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "geowb/format.hpp"
#include "geowb/holonomy.hpp"
#include "geowb/trace_tree.hpp"

namespace geowb {

namespace {

void check_cubic(const MarkovTriple& t) {
  if (t.a * t.a + t.b * t.b + t.c * t.c != 3 * t.a * t.b * t.c)
    throw std::runtime_error("markov_tree: cubic invariant violated");
}

}  // namespace

std::vector<MarkovTriple> markov_tree(const mpz_class& bound) {
  std::vector<MarkovTriple> out;
  if (bound < 1) return out;

  std::set<std::tuple<mpz_class, mpz_class, mpz_class>> seen;
  std::vector<MarkovTriple> stack{MarkovTriple{1, 1, 1}};
  while (!stack.empty()) {
    const MarkovTriple t = stack.back();
    stack.pop_back();
    if (t.c > bound) continue;
    if (!seen.emplace(t.a, t.b, t.c).second) continue;
    check_cubic(t);
    out.push_back(t);
    // Both ascending Vieta moves give sorted triples since the new entry is
    // at least 2c.
    stack.push_back(MarkovTriple{t.a, t.c, 3 * t.a * t.c - t.b});
    stack.push_back(MarkovTriple{t.b, t.c, 3 * t.b * t.c - t.a});
  }
  std::sort(out.begin(), out.end());
  return out;
}

FrobeniusReport frobenius_scan(const mpz_class& bound) {
  FrobeniusReport rep;
  rep.bound = bound;
  rep.triples = markov_tree(bound);

  std::map<mpz_class, int> per_max;
  for (const MarkovTriple& t : rep.triples) per_max[t.c] += 1;
  for (const auto& [m, count] : per_max) {
    rep.markov_numbers.push_back(m);
    if (count > 1) rep.collisions.emplace_back(m, count);
  }
  rep.unique = rep.collisions.empty();
  return rep;
}

CorrespondenceReport modular_correspondence(long long bound) {
  if (bound < 1)
    throw std::invalid_argument("modular_correspondence: bound must be >= 1");
  CorrespondenceReport rep;
  rep.bound = bound;

  std::set<long long> markov;
  for (const MarkovTriple& t : markov_tree(mpz_class(static_cast<long>(bound))))
    markov.insert(static_cast<long long>(t.c.get_si()));

  const HolonomyRep torus = modular_torus();
  const double max_trace = 3.0 * static_cast<double>(bound);
  const SimpleSpectrum spec = trace_tree(torus, trace_to_length(max_trace) + 1e-12);

  std::map<long long, int> mult;
  for (const SimpleEntry& e : spec.entries) {
    const long long t = std::llround(e.trace);
    if (std::abs(e.trace - static_cast<double>(t)) >
        1e-6 * std::max(1.0, e.trace)) {
      rep.diagnostics.push_back("non-integer trace " + format_double(e.trace));
      continue;
    }
    mult[t] += 1;
  }

  for (const auto& [t, count] : mult) {
    rep.trace_multiplicities.emplace_back(t, count);
    if (t % 3 != 0 || markov.count(t / 3) == 0)
      rep.diagnostics.push_back("trace " + format_int(t) +
                                " is not 3x a Markov number");
    if (count % 3 != 0)
      rep.diagnostics.push_back("trace " + format_int(t) + " multiplicity " +
                                format_int(count) + " not divisible by 3");
  }
  for (const long long m : markov) {
    if (mult.count(3 * m) == 0)
      rep.diagnostics.push_back("Markov number " + format_int(m) +
                                " missing from the trace set");
  }
  rep.systole_multiplicity = mult.count(3) ? mult.at(3) : 0;
  if (rep.systole_multiplicity != 3)
    rep.diagnostics.push_back("systole multiplicity " +
                              format_int(rep.systole_multiplicity) + " != 3");

  rep.matched = rep.diagnostics.empty();
  rep.status = rep.matched ? "exact match" : "mismatch";
  return rep;
}

std::string markov_report_json(const FrobeniusReport& scan,
                               const CorrespondenceReport* correspondence) {
  nlohmann::ordered_json j;
  j["bound"] = scan.bound.get_str();
  j["triples"] = nlohmann::ordered_json::array();
  for (const MarkovTriple& t : scan.triples)
    j["triples"].push_back({t.a.get_str(), t.b.get_str(), t.c.get_str()});
  j["markov_numbers"] = nlohmann::ordered_json::array();
  for (const mpz_class& m : scan.markov_numbers)
    j["markov_numbers"].push_back(m.get_str());
  j["collisions"] = nlohmann::ordered_json::array();
  for (const auto& [m, count] : scan.collisions)
    j["collisions"].push_back({{"max", m.get_str()}, {"triples", count}});
  j["unique"] = scan.unique;

  if (correspondence == nullptr) {
    j["correspondence_status"] = "not_checked";
  } else {
    j["correspondence_status"] = correspondence->status;
    nlohmann::ordered_json c;
    c["bound"] = correspondence->bound;
    c["matched"] = correspondence->matched;
    c["systole_multiplicity"] = correspondence->systole_multiplicity;
    c["orientation_factor"] = 2;  // multiplicities count unoriented classes
    c["trace_multiplicities"] = nlohmann::ordered_json::array();
    for (const auto& [t, count] : correspondence->trace_multiplicities)
      c["trace_multiplicities"].push_back({{"trace", t}, {"count", count}});
    c["diagnostics"] = correspondence->diagnostics;
    j["correspondence"] = c;
  }
  return j.dump(2);
}

}  // namespace geowb
