#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "engine.hpp"
#include "lenum/groebner.hpp"

namespace lenum {

namespace {

using detail::ZPoly;

std::vector<ZPoly> to_zpolys(const std::vector<Polynomial>& ps, const MonomialOrder& order) {
  std::vector<ZPoly> out;
  out.reserve(ps.size());
  for (const auto& p : ps)
    if (!p.is_zero()) out.push_back(detail::to_zpoly(p, order));
  return out;
}

std::string fresh_name(const std::vector<std::string>& vars) {
  std::string name = "_t";
  while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
  return name;
}

/// Ring with one extra variable appended at the end.
std::vector<std::string> extended(const std::vector<std::string>& vars) {
  auto out = vars;
  out.push_back(fresh_name(vars));
  return out;
}

/// Exact quotient p / h; throws if h does not divide p.
Polynomial divide_exact(Polynomial p, const Polynomial& h) {
  const Term& lead = h.terms().front();
  std::vector<Term> q;
  while (!p.is_zero()) {
    const Term& t = p.terms().front();
    if (!lead.mono.divides(t.mono)) throw std::logic_error("divide_exact: not divisible");
    Term c{t.mono / lead.mono, t.coeff / lead.coeff};
    q.push_back(c);
    p -= h * Polynomial::monomial(p.vars(), c.mono, c.coeff);
  }
  return Polynomial::from_terms(h.vars(), std::move(q));
}

Ideal maximal_ideal(const std::vector<std::string>& vars) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < vars.size(); ++i) gens.push_back(Polynomial::variable(vars, i));
  return Ideal(vars, gens);
}

bool has_unit_constant(const Ideal& ideal) {
  for (const auto& g : ideal.gens())
    if (g.constant_term() != 0) return true;
  return false;
}

}  // namespace

Ideal::Ideal(std::vector<std::string> vars, std::vector<Polynomial> gens)
    : vars_(std::move(vars)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.vars() != vars_) throw std::invalid_argument("ideal generators live in different rings");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(std::vector<std::string> vars) {
  auto one = Polynomial::constant(vars, 1);
  return Ideal(std::move(vars), {one});
}

const Basis& Ideal::basis(const MonomialOrder& order) const {
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return *it->second;
  }
  std::unique_lock lock(cache_->mutex);
  auto it = cache_->bases.find(order);
  if (it != cache_->bases.end()) return *it->second;

  std::vector<ZPoly> result;
  if (order.is_global()) {
    result = detail::buchberger(to_zpolys(gens_, order), order);
  } else {
    // Homogenizing a degree-compatible basis yields the saturated homogeneous ideal.
    lock.unlock();
    const Basis& global = basis(MonomialOrder::grevlex());
    lock.lock();
    it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return *it->second;
    result = detail::lazard(to_zpolys(global.elements, order), order);
  }
  auto b = std::make_shared<Basis>();
  b->order = order;
  b->reduced = order.is_global();
  for (const auto& z : result) {
    b->leads.push_back(z.front().mono);
    b->elements.push_back(detail::from_zpoly(z, vars_, true));
  }
  auto [pos, inserted] = cache_->bases.emplace(order, std::move(b));
  return *pos->second;
}

bool Ideal::contains(const Polynomial& p) const {
  if (p.is_zero()) return true;
  auto order = MonomialOrder::grevlex();
  const Basis& b = basis(order);
  if (b.is_unit()) return true;
  auto base = to_zpolys(b.elements, order);
  return detail::reduce(detail::to_zpoly(p, order), base, order).empty();
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::origin_in_variety() const { return !has_unit_constant(*this); }

Ideal Ideal::operator+(const Ideal& other) const {
  if (other.vars_ != vars_) throw std::invalid_argument("ideal sum across different rings");
  auto g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(vars_, std::move(g));
}

Ideal Ideal::with(const Polynomial& p) const { return with(std::vector<Polynomial>{p}); }

Ideal Ideal::with(const std::vector<Polynomial>& ps) const {
  auto g = gens_;
  g.insert(g.end(), ps.begin(), ps.end());
  return Ideal(vars_, std::move(g));
}

Ideal Ideal::drop_variable(std::size_t i) const {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (k != i) names.push_back(vars_[k]);
  std::vector<Polynomial> g;
  for (const auto& p : gens_) g.push_back(p.drop_variable(i));
  return Ideal(std::move(names), std::move(g));
}

Basis groebner(const Ideal& ideal, const MonomialOrder& order) {
  if (!order.is_global()) throw std::invalid_argument("groebner requires a global order");
  return ideal.basis(order);
}

Polynomial normal_form(const Polynomial& p, const Basis& basis) {
  if (!basis.order.is_global()) throw std::invalid_argument("normal_form requires a global basis");
  const auto& order = basis.order;
  auto greater = [&order](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; };
  std::map<Monomial, Rational, decltype(greater)> h(greater);
  for (const auto& t : p.terms()) h.emplace(t.mono, t.coeff);
  std::vector<Term> rest;
  while (!h.empty()) {
    auto top = h.begin();
    Monomial m = top->first;
    Rational c = top->second;
    std::size_t k = 0;
    while (k < basis.leads.size() && !basis.leads[k].divides(m)) ++k;
    if (k == basis.leads.size()) {
      rest.push_back({m, c});
      h.erase(top);
      continue;
    }
    const Polynomial& g = basis.elements[k];
    Monomial shift = m / basis.leads[k];
    Rational scale = c / g.coefficient(basis.leads[k]);
    for (const auto& t : g.terms()) {
      Monomial tm = t.mono * shift;
      auto [it, fresh] = h.emplace(tm, 0);
      it->second -= scale * t.coeff;
      if (it->second == 0) h.erase(it);
    }
  }
  return Polynomial::from_terms(p.vars(), std::move(rest));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars) {
  if (vars.empty()) return ideal;
  if (vars.size() >= ideal.nvars()) throw std::invalid_argument("eliminate: must keep at least one variable");
  const Basis& b = ideal.basis(MonomialOrder::elimination(vars));
  std::vector<Polynomial> kept;
  for (const auto& g : b.elements) {
    bool free = std::none_of(vars.begin(), vars.end(), [&g](std::size_t v) { return g.depends_on(v); });
    if (free) kept.push_back(g);
  }
  return Ideal(ideal.vars(), std::move(kept));
}

namespace {

/// Eliminates the appended last variable of `big` and returns the result in `vars`.
Ideal eliminate_last(const Ideal& big, const std::vector<std::string>& vars) {
  Ideal e = eliminate(big, {big.nvars() - 1});
  std::vector<Polynomial> g;
  for (const auto& p : e.gens()) g.push_back(p.drop_variable(big.nvars() - 1));
  return Ideal(vars, std::move(g));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("intersect across different rings");
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.vars());
  auto names = extended(a.vars());
  auto t = Polynomial::variable(names, names.size() - 1);
  auto one_minus_t = Polynomial::constant(names, 1) - t;
  std::vector<Polynomial> g;
  for (const auto& p : a.gens()) g.push_back(t * p.rename_into(names));
  for (const auto& p : b.gens()) g.push_back(one_minus_t * p.rename_into(names));
  return eliminate_last(Ideal(names, std::move(g)), a.vars());
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("gcd across different rings");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Ideal meet = intersect(Ideal(a.vars(), {a}), Ideal(a.vars(), {b}));
  const auto& lcm = meet.basis(MonomialOrder::grevlex()).elements;
  if (lcm.size() != 1) throw std::logic_error("gcd: intersection of principal ideals is not principal");
  return divide_exact(a * b, lcm.front()).monic();
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("ideal_quotient across different rings");
  std::optional<Ideal> acc;
  for (const auto& h : b.gens()) {
    Ideal part = Ideal::unit(a.vars());
    if (!h.is_constant()) {
      Ideal meet = intersect(a, Ideal(a.vars(), {h}));
      std::vector<Polynomial> g;
      for (const auto& p : meet.gens()) g.push_back(divide_exact(p, h));
      part = Ideal(a.vars(), std::move(g));
    } else {
      part = a;
    }
    acc = acc ? intersect(*acc, part) : part;
  }
  return acc ? *acc : Ideal::unit(a.vars());
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  Ideal current = a;
  for (int round = 0; round < 64; ++round) {
    Ideal next = ideal_quotient(current, b);
    if (current.contains(next)) return current;
    current = next;
  }
  throw std::runtime_error("saturation did not stabilize within 64 quotients");
}

Ideal saturate(const Ideal& a, const Polynomial& h) {
  if (h.is_zero()) return Ideal::unit(a.vars());
  if (h.is_constant() || a.is_zero()) return a;
  auto names = extended(a.vars());
  auto t = Polynomial::variable(names, names.size() - 1);
  std::vector<Polynomial> g;
  for (const auto& p : a.gens()) g.push_back(p.rename_into(names));
  g.push_back(Polynomial::constant(names, 1) - t * h.rename_into(names));
  return eliminate_last(Ideal(names, std::move(g)), a.vars());
}

int dim(const Ideal& ideal) {
  const Basis& b = ideal.basis(MonomialOrder::grevlex());
  return independent_set_dim(b.leads, ideal.nvars());
}

Basis local_standard_basis(const Ideal& ideal) { return ideal.basis(MonomialOrder::local()); }

Basis mora_standard_basis(const Ideal& ideal) {
  const auto order = MonomialOrder::local();
  Basis b;
  b.order = order;
  for (const auto& z : detail::mora(to_zpolys(ideal.gens(), order), order)) {
    b.leads.push_back(z.front().mono);
    b.elements.push_back(detail::from_zpoly(z, ideal.vars(), true));
  }
  return b;
}

int local_dim(const Ideal& ideal) {
  const Basis& b = ideal.basis(MonomialOrder::local());
  return hilbert_data(b.leads, ideal.nvars()).dimension;
}

std::optional<Integer> local_quotient_dim(const Ideal& ideal) {
  const Basis& b = ideal.basis(MonomialOrder::local());
  HilbertData h = hilbert_data(b.leads, ideal.nvars());
  if (h.dimension < 0) return Integer(0);
  if (h.dimension > 0) return std::nullopt;
  return h.degree;
}

Integer hs_multiplicity(const Ideal& ideal) {
  const Basis& b = ideal.basis(MonomialOrder::local());
  HilbertData h = hilbert_data(b.leads, ideal.nvars());
  if (h.dimension < 0) throw std::domain_error("hs_multiplicity: origin is not on the variety");
  return h.degree;
}

std::optional<Integer> local_length_via_primary_component(const Ideal& ideal) {
  const auto& vars = ideal.vars();
  Ideal m = maximal_ideal(vars);
  if (has_unit_constant(ideal) || ideal.with(m.gens()).is_unit()) return Integer(0);
  Ideal away = saturate(ideal, m);
  // Components through the origin other than the point itself.
  if (!away.with(m.gens()).is_unit()) return std::nullopt;
  Ideal primary = ideal_quotient(ideal, away);
  const Basis& b = primary.basis(MonomialOrder::grevlex());
  HilbertData h = hilbert_data(b.leads, ideal.nvars());
  if (h.dimension != 0) return std::nullopt;
  return h.degree;
}

bool radical_member(const Polynomial& g, const Ideal& ideal) {
  auto names = extended(ideal.vars());
  auto t = Polynomial::variable(names, names.size() - 1);
  std::vector<Polynomial> gens;
  for (const auto& p : ideal.gens()) gens.push_back(p.rename_into(names));
  gens.push_back(Polynomial::constant(names, 1) - t * g.rename_into(names));
  return Ideal(names, std::move(gens)).is_unit();
}

bool radical_member_at_origin(const Polynomial& g, const Ideal& ideal) {
  Ideal sat = saturate(ideal, g);
  return sat.with(maximal_ideal(ideal.vars()).gens()).is_unit();
}

}  // namespace lenum
