#include <doctest.h>

#include <string>
#include <vector>

#include "corpus.hpp"

using namespace lenum;
using corpus::Member;
using corpus::semihomogeneous;

TEST_CASE("property corpus") {
  const std::vector<Member> members = corpus::property_corpus();
  int per_s[3] = {0, 0, 0}, homogeneous = 0, semi = 0;
  for (const auto& m : members) {
    ++per_s[m.s];
    if (homogeneous_degree(m.f)) ++homogeneous;
    if (m.s == 0 && semihomogeneous(m.f)) ++semi;
  }
  REQUIRE(members.size() >= 20);
  CHECK(per_s[0] > 0);
  CHECK(per_s[1] > 0);
  CHECK(per_s[2] > 0);
  CHECK(homogeneous > 0);
  CHECK(semi > 0);
  CHECK(semi < per_s[0]);

  for (const auto& m : members)
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      CAPTURE(m.text);
      CAPTURE(seed);
      CHECK(corpus::property_failures(m, seed) == std::vector<std::string>{});
    }
}
