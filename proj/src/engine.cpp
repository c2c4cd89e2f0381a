#include "engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace lenum::detail {

namespace {

struct Element {
  ZPoly poly;
  Monomial lead;
  std::uint32_t lead_support = 0;
  unsigned ecart = 0;
  bool active = true;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

unsigned max_degree(const ZPoly& p) {
  unsigned d = 0;
  for (const auto& t : p) d = std::max(d, t.mono.degree());
  return d;
}

bool may_divide(std::uint32_t small_support, const Monomial& small, std::uint32_t big_support,
                const Monomial& big) {
  return (small_support & ~big_support) == 0 && small.divides(big);
}

/// h := a*h - b*shift*g with the leading terms assumed to cancel.
void cancel_lead(ZPoly& h, const Integer& a, const Integer& b, const Monomial& shift, const ZPoly& g,
                 const MonomialOrder& order) {
  ZPoly out;
  out.reserve(h.size() + g.size());
  auto hi = h.begin() + 1;
  auto gi = g.begin() + 1;
  Integer tmp;
  while (hi != h.end() || gi != g.end()) {
    if (gi == g.end()) {
      out.push_back({hi->mono, a * hi->coeff});
      ++hi;
      continue;
    }
    Monomial gm = gi->mono * shift;
    int c = hi == h.end() ? -1 : order.compare(hi->mono, gm);
    if (c > 0) {
      out.push_back({hi->mono, a * hi->coeff});
      ++hi;
    } else if (c < 0) {
      tmp = -b * gi->coeff;
      out.push_back({gm, tmp});
      ++gi;
    } else {
      tmp = a * hi->coeff - b * gi->coeff;
      if (tmp != 0) out.push_back({gm, tmp});
      ++hi;
      ++gi;
    }
  }
  h.swap(out);
}

/// Reduces the term of h at position idx (whose monomial is divisible by
/// lead(g)) and returns nothing; h is rescaled by a positive integer.
void reduce_term(ZPoly& h, std::size_t idx, const ZPoly& g, const MonomialOrder& order) {
  Monomial shift = h[idx].mono / g.front().mono;
  Integer d = gcd(h[idx].coeff, g.front().coeff);
  Integer a = g.front().coeff / d;
  Integer b = h[idx].coeff / d;
  if (a < 0) {
    a = -a;
    b = -b;
  }
  if (idx == 0) {
    cancel_lead(h, a, b, shift, g, order);
    return;
  }
  // Tail reduction: keep the prefix, cancel the term at idx.
  ZPoly tail(h.begin() + static_cast<std::ptrdiff_t>(idx), h.end());
  cancel_lead(tail, a, b, shift, g, order);
  for (std::size_t k = 0; k < idx; ++k) h[k].coeff *= a;
  h.resize(idx);
  h.insert(h.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
}

ZPoly spoly(const ZPoly& f, const ZPoly& g, const MonomialOrder& order) {
  Monomial l = f.front().mono.lcm(g.front().mono);
  Monomial sf = l / f.front().mono;
  Monomial sg = l / g.front().mono;
  ZPoly a;
  a.reserve(f.size());
  for (const auto& t : f) a.push_back({t.mono * sf, t.coeff});
  ZPoly b;
  b.reserve(g.size());
  for (const auto& t : g) b.push_back({t.mono * sg, t.coeff});
  Integer d = gcd(f.front().coeff, g.front().coeff);
  Integer ca = g.front().coeff / d;
  Integer cb = f.front().coeff / d;
  cancel_lead(a, ca, cb, Monomial(l.nvars()), b, order);
  return a;
}

void content_if_large(ZPoly& h, unsigned& steps) {
  if (++steps % 4 == 0) make_primitive(h);
}

class PairSet {
 public:
  explicit PairSet(const MonomialOrder& order) : order_(order) {}

  bool empty() const { return pairs_.empty(); }

  /// Normal selection: smallest lcm first. For the local order that would
  /// mean highest degree, so there the lowest degree goes first.
  bool precedes(const Pair& p, const Pair& q) const {
    if (order_.is_global()) return order_.compare(p.lcm, q.lcm) < 0;
    if (p.lcm.degree() != q.lcm.degree()) return p.lcm.degree() < q.lcm.degree();
    return order_.compare(p.lcm, q.lcm) > 0;
  }

  Pair pop() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& p = pairs_[k];
      const Pair& q = pairs_[best];
      if (precedes(p, q)) best = k;
    }
    Pair out = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return out;
  }

  /// Gebauer-Moeller update for a new element `h` at index hi.
  void update(std::vector<Element>& elems, std::size_t hi) {
    const Element& h = elems[hi];
    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (!elems[k].active) continue;
      candidates.push_back({k, hi, elems[k].lead.lcm(h.lead)});
    }
    // Chain criterion among the new pairs; coprime pairs are kept here so they
    // can shadow others, then dropped by the product criterion.
    std::vector<Pair> kept;
    std::vector<bool> is_coprime;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool coprime = elems[p.i].lead.coprime(h.lead);
      bool redundant = false;
      if (!coprime) {
        for (std::size_t d = c + 1; d < candidates.size() && !redundant; ++d)
          redundant = candidates[d].lcm.divides(p.lcm);
        for (std::size_t d = 0; d < kept.size() && !redundant; ++d) redundant = kept[d].lcm.divides(p.lcm);
      }
      if (!redundant) {
        kept.push_back(p);
        is_coprime.push_back(coprime);
      }
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const Monomial& li = elems[p.i].lead;
      const Monomial& lj = elems[p.j].lead;
      bool drop = h.lead.divides(p.lcm) && !(li.lcm(h.lead) == p.lcm) && !(h.lead.lcm(lj) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (!is_coprime[k]) next.push_back(kept[k]);
    pairs_.swap(next);
    for (std::size_t k = 0; k < hi; ++k)
      if (elems[k].active && h.lead.divides(elems[k].lead)) elems[k].active = false;
  }

 private:
  const MonomialOrder& order_;
  std::vector<Pair> pairs_;
};

Element make_element(ZPoly p) {
  Element e;
  e.lead = p.front().mono;
  e.lead_support = e.lead.support();
  e.poly = std::move(p);
  e.ecart = max_degree(e.poly) - e.lead.degree();
  return e;
}

/// Top-reduction by active elements (global orders).
void top_reduce(ZPoly& h, const std::vector<Element>& elems, const MonomialOrder& order) {
  unsigned steps = 0;
  while (!h.empty()) {
    const Monomial& lm = h.front().mono;
    std::uint32_t sup = lm.support();
    const Element* red = nullptr;
    for (const auto& e : elems) {
      if (e.active && may_divide(e.lead_support, e.lead, sup, lm)) {
        red = &e;
        break;
      }
    }
    if (!red) return;
    reduce_term(h, 0, red->poly, order);
    content_if_large(h, steps);
  }
}

void full_reduce(ZPoly& h, const std::vector<const ZPoly*>& basis, const MonomialOrder& order) {
  unsigned steps = 0;
  std::size_t idx = 0;
  while (idx < h.size()) {
    const Monomial& m = h[idx].mono;
    std::uint32_t sup = m.support();
    const ZPoly* red = nullptr;
    for (const ZPoly* g : basis) {
      if (may_divide(g->front().mono.support(), g->front().mono, sup, m)) {
        red = g;
        break;
      }
    }
    if (!red) {
      ++idx;
      continue;
    }
    reduce_term(h, idx, *red, order);
    content_if_large(h, steps);
  }
  make_primitive(h);
}

std::vector<ZPoly> initial_elements(const std::vector<ZPoly>& gens) {
  std::vector<ZPoly> out;
  for (const auto& g : gens)
    if (!g.empty()) out.push_back(g);
  return out;
}

}  // namespace

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().coeff < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_zpoly(const Polynomial& p, const MonomialOrder& order) {
  Integer den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  ZPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Rational scaled = t.coeff * den;
    out.push_back({t.mono, scaled.get_num()});
  }
  std::sort(out.begin(), out.end(),
            [&order](const ZTerm& a, const ZTerm& b) { return order.compare(a.mono, b.mono) > 0; });
  make_primitive(out);
  return out;
}

Polynomial from_zpoly(const ZPoly& p, const std::vector<std::string>& vars, bool make_monic) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  Rational scale = 1;
  if (make_monic && !p.empty()) scale = Rational(1) / Rational(p.front().coeff);
  for (const auto& t : p) terms.push_back({t.mono, Rational(t.coeff) * scale});
  return Polynomial::from_terms(vars, std::move(terms));
}

std::vector<ZPoly> buchberger(const std::vector<ZPoly>& gens, const MonomialOrder& order) {
  if (!order.is_global()) throw std::invalid_argument("buchberger requires a global order");
  std::vector<Element> elems;
  PairSet pairs(order);

  auto add = [&](ZPoly h) {
    std::vector<const ZPoly*> active;
    for (const auto& e : elems)
      if (e.active) active.push_back(&e.poly);
    full_reduce(h, active, order);
    elems.push_back(make_element(std::move(h)));
    pairs.update(elems, elems.size() - 1);
  };

  for (auto g : initial_elements(gens)) {
    top_reduce(g, elems, order);
    if (!g.empty()) add(std::move(g));
  }

  while (!pairs.empty()) {
    Pair p = pairs.pop();
    ZPoly s = spoly(elems[p.i].poly, elems[p.j].poly, order);
    top_reduce(s, elems, order);
    if (s.empty()) continue;
    if (s.front().mono.is_one()) {
      ZPoly one{{s.front().mono, Integer(1)}};
      return {one};
    }
    add(std::move(s));
  }

  // Minimal basis, then interreduction.
  std::vector<ZPoly> minimal;
  for (const auto& e : elems)
    if (e.active) minimal.push_back(e.poly);
  std::sort(minimal.begin(), minimal.end(),
            [&order](const ZPoly& a, const ZPoly& b) { return order.compare(a.front().mono, b.front().mono) < 0; });
  std::vector<ZPoly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const ZPoly*> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(&minimal[m]);
    // Leading terms of a minimal basis are irreducible, so only tails change.
    ZPoly h = minimal[k];
    full_reduce(h, others, order);
    reduced.push_back(std::move(h));
  }
  return reduced;
}

ZPoly reduce(ZPoly h, const std::vector<ZPoly>& basis, const MonomialOrder& order) {
  std::vector<const ZPoly*> ptrs;
  for (const auto& g : basis)
    if (!g.empty()) ptrs.push_back(&g);
  full_reduce(h, ptrs, order);
  return h;
}

namespace {

/// Mora's weak normal form with ecart-minimal reducer choice. Intermediate
/// results with small ecart are appended to `extras` and used as reducers.
ZPoly mora_normal_form(ZPoly h, const std::vector<Element>& base, const MonomialOrder& order) {
  std::vector<Element> extras;
  unsigned steps = 0;
  while (!h.empty()) {
    const Monomial lm = h.front().mono;
    std::uint32_t sup = lm.support();
    const Element* best = nullptr;
    auto consider = [&](const Element& e) {
      if (!e.active || !may_divide(e.lead_support, e.lead, sup, lm)) return;
      if (!best || e.ecart < best->ecart) best = &e;
    };
    for (const auto& e : base) consider(e);
    for (const auto& e : extras) consider(e);
    if (!best) return h;
    unsigned h_ecart = max_degree(h) - lm.degree();
    if (best->ecart > h_ecart) {
      ZPoly reducer = best->poly;
      ZPoly copy = h;
      make_primitive(copy);
      extras.push_back(make_element(std::move(copy)));
      reduce_term(h, 0, reducer, order);
    } else {
      reduce_term(h, 0, best->poly, order);
    }
    content_if_large(h, steps);
  }
  return h;
}

}  // namespace

std::vector<ZPoly> mora(const std::vector<ZPoly>& gens, const MonomialOrder& order) {
  if (order.is_global()) throw std::invalid_argument("mora expects a local order");
  std::vector<Element> elems;
  PairSet pairs(order);

  auto add = [&](ZPoly h) {
    make_primitive(h);
    elems.push_back(make_element(std::move(h)));
    pairs.update(elems, elems.size() - 1);
  };

  for (const auto& g : initial_elements(gens)) {
    ZPoly h = mora_normal_form(g, elems, order);
    if (h.empty()) continue;
    if (h.front().mono.is_one()) return {ZPoly{{h.front().mono, Integer(1)}}};
    add(std::move(h));
  }

  while (!pairs.empty()) {
    Pair p = pairs.pop();
    ZPoly s = spoly(elems[p.i].poly, elems[p.j].poly, order);
    if (s.empty()) continue;
    ZPoly h = mora_normal_form(std::move(s), elems, order);
    if (h.empty()) continue;
    if (h.front().mono.is_one()) return {ZPoly{{h.front().mono, Integer(1)}}};
    add(std::move(h));
  }

  std::vector<ZPoly> out;
  for (const auto& e : elems)
    if (e.active) out.push_back(e.poly);
  return out;
}

std::vector<ZPoly> lazard(const std::vector<ZPoly>& gens, const MonomialOrder& order) {
  if (order.is_global()) throw std::invalid_argument("lazard expects a local order");
  auto gs = initial_elements(gens);
  if (gs.empty()) return {};
  const std::size_t n = gs.front().front().mono.nvars();
  if (n + 1 > Monomial::kMaxVars) throw std::invalid_argument("too many variables for homogenization");
  const MonomialOrder hom = MonomialOrder::homogenized_local();

  auto lift = [n](const Monomial& m, unsigned t) {
    Monomial out(n + 1);
    for (std::size_t i = 0; i < n; ++i) out.set(i, m[i]);
    out.set(n, t);
    return out;
  };
  std::vector<ZPoly> homogeneous;
  for (const auto& g : gs) {
    unsigned top = max_degree(g);
    ZPoly h;
    for (const auto& t : g) h.push_back({lift(t.mono, top - t.mono.degree()), t.coeff});
    std::sort(h.begin(), h.end(), [&hom](const ZTerm& a, const ZTerm& b) { return hom.compare(a.mono, b.mono) > 0; });
    homogeneous.push_back(std::move(h));
  }

  std::vector<ZPoly> out;
  for (const auto& h : buchberger(homogeneous, hom)) {
    ZPoly p;
    for (const auto& t : h) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
      p.push_back({m, t.coeff});
    }
    std::sort(p.begin(), p.end(), [&order](const ZTerm& a, const ZTerm& b) { return order.compare(a.mono, b.mono) > 0; });
    make_primitive(p);
    out.push_back(std::move(p));
  }
  // Keep elements with minimal leading monomials.
  std::vector<bool> redundant(out.size(), false);
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t m = 0; m < out.size() && !redundant[k]; ++m) {
      if (m == k) continue;
      const Monomial& a = out[m].front().mono;
      const Monomial& b = out[k].front().mono;
      redundant[k] = a.divides(b) && (!(a == b) || m < k);
    }
  std::vector<ZPoly> minimal;
  for (std::size_t k = 0; k < out.size(); ++k)
    if (!redundant[k]) minimal.push_back(std::move(out[k]));
  return minimal;
}

}  // namespace lenum::detail
