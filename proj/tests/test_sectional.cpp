#include <doctest.h>

#include <stdexcept>

#include "lenum/frame.hpp"
#include "lenum/sectional.hpp"

using namespace lenum;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> TXY{"t", "x", "y"};
const std::vector<std::string> WXYZ{"w", "x", "y", "z"};

Polynomial P(const char* s, const std::vector<std::string>& v) { return parse(s, v); }

Integer ipow(Integer b, unsigned e) {
  Integer r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("milnor numbers of Brieskorn curves") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b) {
      std::string f = "x^" + std::to_string(a) + "+y^" + std::to_string(b);
      CHECK(milnor(parse(f, XY)) == Integer((a - 1) * (b - 1)));
    }
}

TEST_CASE("milnor number edge cases") {
  CHECK(milnor(P("x+y^2", XY)) == Integer(0));
  CHECK(!milnor(P("x^2", XY)));
  CHECK(!milnor(Polynomial(XY)));
  CHECK_THROWS_AS(milnor(P("x^2+1", XY)), std::domain_error);
  // Brieskorn surface: product of (a_i - 1).
  CHECK(milnor(P("x^2+y^3+z^4", XYZ)) == Integer(1 * 2 * 3));
  CHECK(critical_dim(P("x^2+y^2", XYZ)) == 1);
  CHECK(critical_dim(P("x^2+y^2+z^2", XYZ)) == 0);
  CHECK(critical_dim(P("x+y^2", XYZ)) == -1);
}

TEST_CASE("sectional milnor numbers of s = 1 examples") {
  Polynomial w = P("y^3-x^4-t^2*x^2", TXY);
  SectionalProfile p = sectional_profile(w, 7);
  REQUIRE(p.mu.size() == 4);
  CHECK(p.mu[0] == Integer(1));
  CHECK(p.mu[1] == Integer(2));
  CHECK(p.mu[2] == Integer(6));
  CHECK(!p.defined(3));
  CHECK(p.agreed[2]);

  Polynomial bn0 = P("(x^2-z^2+y^2)*(x-z)", XYZ);
  CHECK(sectional(bn0, 2, 5).mu == Integer(4));
  CHECK(sectional(bn0, 1, 5).mu == Integer(2));
}

TEST_CASE("sectional milnor number of the s = 2 example") {
  Polynomial f = P("z^2+(w^4+x^3+y^2)^2", WXYZ);
  CHECK(critical_dim(f) == 2);
  SectionalValue v = sectional(f, 2, 9);
  CHECK(v.mu == Integer(3));
  CHECK(v.agreed);
  CHECK(!sectional(f, 3, 9).mu);
  CHECK(sectional(f, 3, 9).seeds.empty());
}

TEST_CASE("sectional invariants") {
  const char* inputs[] = {"x^3+y^3+z^3", "x^2+y^3+z^5", "x^2*y+y^4+z^2", "x^4+y^4+z^4+x*y*z^2"};
  for (const char* s : inputs) {
    Polynomial f = P(s, XYZ);
    SectionalProfile p = sectional_profile(f, 13);
    CAPTURE(s);
    CHECK(p.mu[0] == Integer(1));
    // A generic line meets V(f) with multiplicity mult f.
    CHECK(p.mu[1] == Integer(mult_origin(f) - 1));
    CHECK(p.mu[3] == milnor(f));
  }
  // Homogeneous isolated: generic slices stay homogeneous of degree d.
  for (unsigned d = 2; d <= 4; ++d) {
    std::string s = "x^" + std::to_string(d) + "+y^" + std::to_string(d) + "+z^" + std::to_string(d);
    SectionalProfile p = sectional_profile(parse(s, XYZ), 17);
    for (unsigned k = 0; k <= 3; ++k) CHECK(p.mu[k] == ipow(d - 1, k));
  }
}

TEST_CASE("sectional is deterministic in its seed") {
  Polynomial f = P("x^2*y+y^4+z^3", XYZ);
  SectionalValue a = sectional(f, 2, 99);
  SectionalValue b = sectional(f, 2, 99);
  CHECK(a.mu == b.mu);
  CHECK(a.seeds == b.seeds);
  CHECK_THROWS_AS(sectional(f, 4, 1), std::out_of_range);
}

TEST_CASE("teissier chain") {
  TeissierChain c = teissier_chain(P("x^3+y^3+z^3", XYZ), 3);
  CHECK(c.mult == 3);
  REQUIRE(c.ratios.size() == 3);
  for (const auto& r : c.ratios) CHECK(r == 2);
  CHECK(c.holds());

  TeissierChain a1 = teissier_chain(P("x^2+y^2", XY), 3);
  CHECK(a1.profile.mu[1] == Integer(1));
  CHECK(a1.profile.mu[2] == Integer(1));
  CHECK(a1.holds());

  TeissierChain cusp = teissier_chain(P("x^2+y^3", XY), 3);
  CHECK(cusp.profile.mu[1] == Integer(1));
  CHECK(cusp.profile.mu[2] == Integer(2));
  CHECK(cusp.ratios[1] == 2);
  CHECK(cusp.holds());

  CHECK_THROWS_AS(teissier_chain(P("x^2+y^2", XYZ), 3), std::domain_error);
  CHECK_THROWS_AS(teissier_chain(P("x+y^2", XY), 3), std::domain_error);
}

TEST_CASE("generic le numbers of a slice") {
  Polynomial f = P("z^2+(w^4+x^3+y^2)^2", WXYZ);
  LeRecord le = generic_slice_le(f, 3, 21, 3);
  REQUIRE(le.fully_defined());
  CHECK(le.s == 1);
  CHECK(le.lambda[0] == 5);
  CHECK(le.lambda[1] == 2);
}
