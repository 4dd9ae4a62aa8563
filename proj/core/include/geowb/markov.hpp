#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace geowb {

// A Markov triple: positive integers a <= b <= c with a^2 + b^2 + c^2 = 3abc.
// All arithmetic in this module is exact big-integer arithmetic.
struct MarkovTriple {
  mpz_class a, b, c;

  friend bool operator==(const MarkovTriple& l, const MarkovTriple& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
  friend bool operator<(const MarkovTriple& l, const MarkovTriple& r) {
    if (l.c != r.c) return l.c < r.c;
    if (l.b != r.b) return l.b < r.b;
    return l.a < r.a;
  }
};

// All Markov triples with c <= bound, each exactly once in sorted canonical
// form, generated from (1,1,1) by the two ascending Vieta moves
// (a,b,c) -> (a,c,3ac-b) and (b,c,3bc-a). Sorted by (c,b,a).
std::vector<MarkovTriple> markov_tree(const mpz_class& bound);

// Uniqueness scan: does every Markov number c <= bound occur as the maximum
// of exactly one triple? A collision would be a counterexample to the
// uniqueness conjecture, so it is reported as a witness, never thrown.
struct FrobeniusReport {
  mpz_class bound;
  std::vector<MarkovTriple> triples;
  std::vector<mpz_class> markov_numbers;               // increasing
  std::vector<std::pair<mpz_class, int>> collisions;   // max value -> #triples
  bool unique = true;
};
FrobeniusReport frobenius_scan(const mpz_class& bound);

// Bridge to the modular torus: the simple-geodesic trace set up to 3*bound
// must equal {3a : a Markov number <= bound}, with every trace multiplicity
// divisible by 3 and the systole (trace 3) of multiplicity exactly 3.
// Multiplicities count unoriented classes; oriented counts are twice these.
struct CorrespondenceReport {
  long long bound = 0;
  bool matched = false;
  std::string status;                                   // "exact match"/"mismatch"
  std::vector<std::string> diagnostics;                 // offending traces
  std::vector<std::pair<long long, int>> trace_multiplicities;
  int systole_multiplicity = 0;
};
CorrespondenceReport modular_correspondence(long long bound);

// JSON report with fields bound, triples, markov_numbers, collisions,
// unique, correspondence_status (and correspondence details when supplied;
// pass nullptr when only the scan ran). Big integers serialize as decimal
// strings.
std::string markov_report_json(const FrobeniusReport& scan,
                               const CorrespondenceReport* correspondence);

}  // namespace geowb
