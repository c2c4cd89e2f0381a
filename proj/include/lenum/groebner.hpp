#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "lenum/order.hpp"
#include "lenum/polynomial.hpp"

namespace lenum {

/// Groebner basis (global order) or standard basis (local order).
struct Basis {
  std::vector<Polynomial> elements;
  std::vector<Monomial> leads;
  MonomialOrder order = MonomialOrder::grevlex();
  bool reduced = false;

  bool is_unit() const { return leads.size() == 1 && leads.front().is_one(); }
};

/// Finitely generated ideal of Q[vars]. Bases are computed on demand and
/// cached per order; copies share the cache.
class Ideal {
 public:
  Ideal(std::vector<std::string> vars, std::vector<Polynomial> gens);
  static Ideal zero(std::vector<std::string> vars) { return Ideal(std::move(vars), {}); }
  static Ideal unit(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Polynomial>& gens() const { return gens_; }

  const Basis& basis(const MonomialOrder& order) const;

  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const { return basis(MonomialOrder::grevlex()).is_unit(); }
  bool is_zero() const { return gens_.empty(); }
  /// True iff every generator vanishes at the origin.
  bool origin_in_variety() const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const Polynomial& p) const;
  Ideal with(const std::vector<Polynomial>& ps) const;
  /// Sets variable i to zero in every generator and removes it from the ring.
  Ideal drop_variable(std::size_t i) const;

 private:
  struct Cache {
    std::shared_mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const Basis>> bases;
  };

  std::vector<std::string> vars_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis. Throws for local orders.
Basis groebner(const Ideal& ideal, const MonomialOrder& order);

/// Remainder of p modulo a reduced global basis; zero iff p is in the ideal.
Polynomial normal_form(const Polynomial& p, const Basis& basis);

/// I intersected with J.
Ideal intersect(const Ideal& a, const Ideal& b);
/// Monic greatest common divisor, read off the generator of (a) intersected
/// with (b). gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// I : J.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);
/// I : J^infinity by iterated quotients (at most 64 rounds).
Ideal saturate(const Ideal& a, const Ideal& b);
/// I : h^infinity through the auxiliary variable 1 - t*h.
Ideal saturate(const Ideal& a, const Polynomial& h);
/// I intersected with the subring without `vars`; generators stay in the
/// same ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars);

/// Krull dimension of V(I) over the algebraic closure; -1 when empty.
int dim(const Ideal& ideal);

/// Standard basis for the negative degree reverse lexicographic order
/// (homogenize, Groebner basis, dehomogenize). Cached on the ideal.
Basis local_standard_basis(const Ideal& ideal);
/// Same leading ideal via Mora's tangent cone normal form. Not cached.
Basis mora_standard_basis(const Ideal& ideal);
/// Dimension of the germ of V(I) at the origin; -1 if the origin is not on V(I).
int local_dim(const Ideal& ideal);
/// Length of the local ring at the origin modulo I; nullopt when infinite.
std::optional<Integer> local_quotient_dim(const Ideal& ideal);
/// Hilbert-Samuel multiplicity of the local ring at the origin modulo I.
Integer hs_multiplicity(const Ideal& ideal);

/// Same length as local_quotient_dim, computed globally from the
/// m-primary component I : (I : m^infinity). Meant as a cross-check.
std::optional<Integer> local_length_via_primary_component(const Ideal& ideal);

/// g vanishes on V(I) (Rabinowitsch: 1 is in I + (1 - t g)).
bool radical_member(const Polynomial& g, const Ideal& ideal);
/// g vanishes on the germ of V(I) at the origin.
bool radical_member_at_origin(const Polynomial& g, const Ideal& ideal);

/// Dimension and degree read off the Hilbert series of Q[x]/(monomials).
struct HilbertData {
  int dimension;   // -1 for the unit ideal
  Integer degree;  // 0 for the unit ideal
};
HilbertData hilbert_data(const std::vector<Monomial>& monomials, std::size_t nvars);
/// Size of a largest set of variables independent modulo the monomial
/// ideal; -1 when the ideal contains 1.
int independent_set_dim(const std::vector<Monomial>& monomials, std::size_t nvars);

}  // namespace lenum
