#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <doctest.h>

#include "geowb/markov.hpp"

using namespace geowb;

namespace {

// Independent brute force: for a <= b with a*b <= bound, solve the cubic as
// a quadratic in c and keep exact integer roots with b <= c <= bound.
std::set<std::tuple<mpz_class, mpz_class, mpz_class>> brute(long bound) {
  std::set<std::tuple<mpz_class, mpz_class, mpz_class>> out;
  for (long a = 1; a * a <= bound; ++a) {
    for (long b = a; a * b <= bound; ++b) {
      const mpz_class A = a, B = b;
      const mpz_class disc = 9 * A * A * B * B - 4 * (A * A + B * B);
      if (disc < 0) continue;
      mpz_class r = sqrt(disc);
      if (r * r != disc) continue;
      const mpz_class c_lo = (3 * A * B - r) / 2;
      const mpz_class c_hi = c_lo + r;
      for (const mpz_class& c : std::vector<mpz_class>{c_lo, c_hi}) {
        if (c < B || c > bound) continue;
        if (A * A + B * B + c * c == 3 * A * B * c) out.emplace(A, B, c);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("markov: tree enumeration matches the frozen small cases") {
  const auto t30 = markov_tree(30);
  REQUIRE(t30.size() == 5);
  CHECK((t30[0] == MarkovTriple{1, 1, 1}));
  CHECK((t30[1] == MarkovTriple{1, 1, 2}));
  CHECK((t30[2] == MarkovTriple{1, 2, 5}));
  CHECK((t30[3] == MarkovTriple{1, 5, 13}));
  CHECK((t30[4] == MarkovTriple{2, 5, 29}));
  CHECK(markov_tree(1).size() == 1);
  CHECK(markov_tree(0).empty());
}

TEST_CASE("markov: tree equals brute-force search to 1e4") {
  const auto tree = markov_tree(10000);
  const auto bf = brute(10000);
  CHECK(tree.size() == bf.size());
  for (const auto& t : tree) CHECK(bf.count({t.a, t.b, t.c}) == 1);
}

TEST_CASE("markov: uniqueness scan to 1e6 sees no collision") {
  const FrobeniusReport fr = frobenius_scan(1000000);
  CHECK(fr.unique);
  CHECK(fr.collisions.empty());
  REQUIRE(fr.markov_numbers.size() >= 6);
  CHECK(fr.markov_numbers[0] == 1);
  CHECK(fr.markov_numbers[1] == 2);
  CHECK(fr.markov_numbers[2] == 5);
  CHECK(fr.markov_numbers[3] == 13);
  CHECK(fr.markov_numbers[4] == 29);
  CHECK(fr.markov_numbers[5] == 34);
  for (std::size_t i = 1; i < fr.markov_numbers.size(); ++i)
    CHECK(fr.markov_numbers[i] > fr.markov_numbers[i - 1]);
}

TEST_CASE("markov: big-integer tree to 1e40") {
  const mpz_class big("10000000000000000000000000000000000000000");
  const auto tr = markov_tree(big);
  CHECK(tr.size() > 500);
  CHECK(tr.back().c.get_str().size() >= 38);
  // Every reported triple satisfies the cubic exactly.
  for (const auto& t : tr)
    CHECK((t.a * t.a + t.b * t.b + t.c * t.c == 3 * t.a * t.b * t.c));
}

TEST_CASE("markov: modular correspondence at 200") {
  const CorrespondenceReport cr = modular_correspondence(200);
  CHECK(cr.matched);
  CHECK(cr.status == "exact match");
  CHECK(cr.systole_multiplicity == 3);
  CHECK(cr.trace_multiplicities.size() == 9);

  const FrobeniusReport fr = frobenius_scan(200);
  const std::string js = markov_report_json(fr, &cr);
  CHECK(js.find("\"correspondence_status\": \"exact match\"") !=
        std::string::npos);
  CHECK(js.find("\"bound\": \"200\"") != std::string::npos);
  CHECK(js.find("\"collisions\": []") != std::string::npos);
  const std::string js2 = markov_report_json(fr, nullptr);
  CHECK(js2.find("\"correspondence_status\": \"not_checked\"") !=
        std::string::npos);
}
