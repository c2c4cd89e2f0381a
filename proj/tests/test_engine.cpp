#include <doctest.h>

#include "lenum/groebner.hpp"
#include "lenum/frame.hpp"
#include "lenum/random.hpp"

using namespace lenum;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Ideal I(const std::vector<std::string>& vars, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse(s, vars));
  return Ideal(vars, g);
}

bool same(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

// Counts monomials outside a monomial ideal, given that all exponents stay below `box`.
long count_standard(const std::vector<Monomial>& gens, std::size_t nvars, unsigned box) {
  long count = 0;
  std::vector<unsigned> e(nvars, 0);
  for (;;) {
    Monomial m(nvars, e);
    bool in = false;
    for (const auto& g : gens) in = in || g.divides(m);
    if (!in) ++count;
    std::size_t i = 0;
    while (i < nvars && ++e[i] == box) e[i++] = 0;
    if (i == nvars) break;
  }
  return count;
}

std::vector<Polynomial> spolys_of(const Basis& b, const std::vector<std::string>& vars) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    for (std::size_t j = i + 1; j < b.elements.size(); ++j) {
      Monomial l = b.leads[i].lcm(b.leads[j]);
      Rational ci = b.elements[i].coefficient(b.leads[i]);
      Rational cj = b.elements[j].coefficient(b.leads[j]);
      out.push_back(Polynomial::monomial(vars, l / b.leads[i], 1 / ci) * b.elements[i] -
                    Polynomial::monomial(vars, l / b.leads[j], 1 / cj) * b.elements[j]);
    }
  return out;
}

}  // namespace

TEST_CASE("groebner basis and normal forms") {
  Ideal a = I(XY, {"x^2-1", "x*y-1"});
  Basis lex = groebner(a, MonomialOrder::lex());
  CHECK(normal_form(parse("y^2-1", XY), lex).is_zero());
  CHECK(normal_form(parse("x-y", XY), lex).is_zero() == a.contains(parse("x-y", XY)));
  CHECK(normal_form(parse("x*y-1", XY), lex).is_zero());
  CHECK(a.contains(parse("x-y", XY)));

  Basis b = groebner(I(XY, {"x", "y"}), MonomialOrder::grevlex());
  CHECK(b.elements.size() == 2);
  CHECK(groebner(Ideal::zero(XY), MonomialOrder::grevlex()).elements.empty());

  Basis c = groebner(I(XY, {"x", "y"}), MonomialOrder::grevlex());
  CHECK(normal_form(parse("1", XY), c) == parse("1", XY));
  CHECK(normal_form(parse("x^2", XY), groebner(I(XY, {"x^2-y", "y"}), MonomialOrder::grevlex())).is_zero());
  CHECK_THROWS(normal_form(parse("x", XY), local_standard_basis(I(XY, {"x"}))));
}

TEST_CASE("every S-polynomial of a returned basis reduces to zero") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      std::vector<Term> ts;
      for (int t = 0; t < 3; ++t) {
        Monomial m(3);
        for (std::size_t v = 0; v < 3; ++v) m.set(v, static_cast<unsigned>(rng.uniform(0, 2)));
        ts.push_back({m, Rational(rng.nonzero(7))});
      }
      gens.push_back(Polynomial::from_terms(XYZ, ts));
    }
    Ideal id(XYZ, gens);
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination({0})}) {
      Basis b = groebner(id, order);
      for (const auto& s : spolys_of(b, XYZ)) CHECK(normal_form(s, b).is_zero());
      for (const auto& g : gens) CHECK(normal_form(g, b).is_zero());
    }
  }
}

TEST_CASE("ideal quotients") {
  CHECK(same(ideal_quotient(I(XY, {"x^2", "x*y"}), I(XY, {"x"})), I(XY, {"x", "y"})));
  Ideal a = I(XY, {"x^3-y^2", "x*y^2"});
  CHECK(same(ideal_quotient(a, Ideal::unit(XY)), a));
  CHECK(same(ideal_quotient(I(XY, {"x"}), I(XY, {"y"})), I(XY, {"x"})));
}

TEST_CASE("saturation") {
  CHECK(saturate(I(XY, {"x^2*y", "x*y^2"}), I(XY, {"x*y"})).is_unit());
  CHECK(same(saturate(I(XY, {"x*y"}), I(XY, {"x"})), I(XY, {"y"})));
  Ideal a = I(XY, {"x^2", "x*y^3"});
  CHECK(same(saturate(a, Ideal::unit(XY)), a));
  CHECK(same(saturate(I(XY, {"x*y"}), parse("x", XY)), I(XY, {"y"})));
  CHECK(saturate(I(XY, {"x^2*y", "x*y^2"}), parse("x*y", XY)).is_unit());
}

TEST_CASE("property: saturation contains the quotient which contains the ideal") {
  Ideal a = I(XYZ, {"x^2*y - z^3", "x*z^2", "y^3*z"});
  Ideal b = I(XYZ, {"x", "z"});
  Ideal q = ideal_quotient(a, b);
  Ideal s = saturate(a, b);
  CHECK(q.contains(a));
  CHECK(s.contains(q));
}

TEST_CASE("elimination") {
  const std::vector<std::string> TXY{"t", "x", "y"};
  Ideal e = eliminate(I(TXY, {"x-t", "y-t^2"}), {0});
  CHECK(same(e, I(TXY, {"y-x^2"})));
  Ideal a = I(TXY, {"x-t", "y-t^2"});
  CHECK(same(eliminate(a, {}), a));
  CHECK(eliminate(I(TXY, {"t*x-1", "x"}), {0}).is_unit());
}

TEST_CASE("intersection") {
  CHECK(same(intersect(I(XY, {"x"}), I(XY, {"y"})), I(XY, {"x*y"})));
  CHECK(same(intersect(I(XY, {"x^2", "y"}), I(XY, {"x", "y^2"})), I(XY, {"x^2", "x*y", "y^2"})));
}

TEST_CASE("global dimension") {
  CHECK(dim(I(XY, {"x", "y"})) == 0);
  CHECK(dim(I(XYZ, {"x-z", "y"})) == 1);
  CHECK(dim(Ideal::unit(XY)) == -1);
  CHECK(dim(Ideal::zero(XYZ)) == 3);
  CHECK(dim(I(XYZ, {"x*y", "x*z"})) == 2);
}

TEST_CASE("property: dimension is frame invariant") {
  std::vector<Ideal> corpus{I(XYZ, {"x*y", "x*z"}), I(XYZ, {"x^2-y*z", "y^3"}), I(XYZ, {"x-z", "y"}),
                            I(XYZ, {"x*y*z"}), I(XYZ, {"x^2", "y^2", "z^2"})};
  for (const auto& id : corpus) {
    int d = dim(id);
    for (std::uint64_t seed : {1u, 2u}) {
      Frame F = Frame::random(3, seed, 3);
      std::vector<Polynomial> g;
      for (const auto& p : id.gens()) g.push_back(apply_frame(p, F));
      CHECK(dim(Ideal(XYZ, g)) == d);
    }
  }
}

TEST_CASE("local standard bases") {
  Basis b = local_standard_basis(I({"x"}, {"x^2+x^3"}));
  REQUIRE(b.leads.size() == 1);
  CHECK(b.leads[0] == Monomial::variable(1, 0, 2));
  Basis c = local_standard_basis(I(XY, {"x", "y"}));
  CHECK(c.leads.size() == 2);
  Basis d = local_standard_basis(I(XY, {"y^2-x^3-x^2"}));
  CHECK(hs_multiplicity(I(XY, {"y^2-x^3-x^2"})) == 2);
  CHECK(d.leads.size() == 1);
}

TEST_CASE("local quotient dimension") {
  CHECK(local_quotient_dim(I(XY, {"x^2", "y^2"})) == Integer(4));
  CHECK(local_quotient_dim(I(XY, {"x-y^2", "y-x^2"})) == Integer(1));
  CHECK(!local_quotient_dim(I(XY, {"x*y"})));
  // Components away from the origin do not count.
  CHECK(local_quotient_dim(I(XY, {"x*(x-1)", "y"})) == Integer(1));
  CHECK(local_quotient_dim(I(XY, {"x-1"})) == Integer(0));
}

TEST_CASE("Hilbert-Samuel multiplicity") {
  CHECK(hs_multiplicity(I(XY, {"x"})) == 1);
  CHECK(hs_multiplicity(I(XY, {"y^2-x^3"})) == 2);
  CHECK(hs_multiplicity(I(XY, {"x*y", "x^2", "y^2"})) == 3);
  CHECK_THROWS(hs_multiplicity(I(XY, {"x-1"})));
}

TEST_CASE("local dimension") {
  CHECK(local_dim(I(XYZ, {"x", "y"})) == 1);
  CHECK(local_dim(I(XYZ, {"x*(z-1)", "y*(z-1)"})) == 1);
  CHECK(local_dim(I(XYZ, {"z-1"})) == -1);
  CHECK(local_dim(I(XYZ, {"x", "y*(y-1)", "z*(z-1)"})) == 0);
}

TEST_CASE("monomial ideals: Hilbert data matches direct counts") {
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Monomial> gens;
    for (std::size_t v = 0; v < 3; ++v) gens.push_back(Monomial::variable(3, v, static_cast<unsigned>(rng.uniform(1, 4))));
    for (int k = 0; k < 3; ++k) {
      Monomial m(3);
      for (std::size_t v = 0; v < 3; ++v) m.set(v, static_cast<unsigned>(rng.uniform(0, 3)));
      if (!m.is_one()) gens.push_back(m);
    }
    HilbertData h = hilbert_data(gens, 3);
    CHECK(h.dimension == 0);
    CHECK(h.degree == count_standard(gens, 3, 5));

    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(Polynomial::monomial(XYZ, g));
    Ideal id(XYZ, polys);
    CHECK(local_quotient_dim(id) == Integer(count_standard(gens, 3, 5)));
    CHECK(hs_multiplicity(id) == count_standard(gens, 3, 5));
  }
  // Positive-dimensional monomial ideal: (x*y) has multiplicity 2 along dimension 1.
  HilbertData h = hilbert_data({Monomial(2, std::vector<unsigned>{1, 1})}, 2);
  CHECK(h.dimension == 1);
  CHECK(h.degree == 2);
}

TEST_CASE("Mora length agrees with the primary-component oracle") {
  std::vector<Ideal> corpus{
      I(XY, {"x^2", "y^2"}),
      I(XY, {"x-y^2", "y-x^2"}),
      I(XY, {"x*(x-1)", "y"}),
      I(XY, {"y^2-x^3", "x*y"}),
      I(XY, {"x^3+y^3-x*y", "x^2-y"}),
      I(XYZ, {"x^2+y*z", "y^2-x*z*(z-1)", "z^3-x"}),
      I(XYZ, {"x*y-z^2", "y^2-x", "z*(z-2)+x"}),
      I(XY, {"(x-1)*x^2", "(y+1)*y^3", "x*y*(x-1)"}),
  };
  for (const auto& id : corpus) {
    auto mora_len = local_quotient_dim(id);
    auto oracle = local_length_via_primary_component(id);
    REQUIRE(mora_len);
    REQUIRE(oracle);
    CHECK(*mora_len == *oracle);
  }
  CHECK(!local_length_via_primary_component(I(XY, {"x^2", "x*y"})));

  // The same lengths read directly off Mora's tangent cone basis.
  for (const auto& id : corpus) {
    Basis mora = mora_standard_basis(id);
    Basis lazard = local_standard_basis(id);
    for (const auto& m : mora.leads) {
      bool covered = false;
      for (const auto& l : lazard.leads) covered = covered || l.divides(m);
      CHECK(covered);
    }
    for (const auto& l : lazard.leads) {
      bool covered = false;
      for (const auto& m : mora.leads) covered = covered || m.divides(l);
      CHECK(covered);
    }
    CHECK(Integer(count_standard(mora.leads, id.nvars(), 12)) == *local_length_via_primary_component(id));
  }
}

TEST_CASE("Milnor numbers of Brieskorn-Pham curves") {
  for (unsigned a = 2; a <= 6; ++a)
    for (unsigned b = 2; b <= 6; ++b) {
      Polynomial f = Polynomial::monomial(XY, Monomial::variable(2, 0, a)) +
                     Polynomial::monomial(XY, Monomial::variable(2, 1, b));
      Ideal jac(XY, {f.partial(0), f.partial(1)});
      CHECK(local_quotient_dim(jac) == Integer((a - 1) * (b - 1)));
    }
}

TEST_CASE("radical membership") {
  CHECK(radical_member(parse("x", XY), I(XY, {"x^2"})));
  CHECK(!radical_member(parse("y", XY), I(XY, {"x"})));
  CHECK(radical_member(parse("x+y", XY), I(XY, {"x^2+2*x*y+y^2"})));
  // Away from the origin the germ is empty or different.
  CHECK(!radical_member(parse("x", XY), I(XY, {"x*(y-1)"})));
  CHECK(radical_member_at_origin(parse("x", XY), I(XY, {"x*(y-1)"})));
  CHECK(!radical_member_at_origin(parse("y", XY), I(XY, {"x*y"})));
}

TEST_CASE("polynomial gcd") {
  Polynomial a = parse("(x-y)^2*(x+y^3)", XY);
  Polynomial b = parse("(x-y)*(x^2+1)*(x+y^3)", XY);
  CHECK(gcd(a, b) == parse("(x-y)*(x+y^3)", XY).monic());
  CHECK(gcd(parse("x", XY), parse("y", XY)) == parse("1", XY));
  CHECK(gcd(parse("2*x^2", XY), Polynomial(XY)) == parse("x^2", XY));
}
