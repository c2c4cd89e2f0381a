#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lenum/groebner.hpp"

namespace lenum {

namespace {

using Series = std::vector<Integer>;  // coefficients of t^0, t^1, ...

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series sub(Series a, const Series& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Series shift(const Series& a, unsigned k) {
  Series out(k, 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

Series mul_one_minus_tk(const Series& a, unsigned k) { return sub(a, shift(a, k)); }

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

/// Numerator K(t) of the Hilbert series K(t)/(1-t)^n of Q[x]/(gens).
Series numerator(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
      pairwise_coprime = gens[i].coprime(gens[j]);
  if (pairwise_coprime) {
    Series s{1};
    for (const auto& g : gens) s = mul_one_minus_tk(s, g.degree());
    return s;
  }

  // Pivot on the variable occurring in the most generators.
  std::vector<unsigned> count(nvars, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < nvars; ++i)
      if (g[i] > 0) ++count[i];
  std::size_t v = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial p = Monomial::variable(nvars, v);

  std::vector<Monomial> with_p = gens;
  with_p.push_back(p);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(p.divides(g) ? g / p : g);

  Series a = numerator(std::move(with_p), nvars);
  Series b = shift(numerator(std::move(quotient), nvars), p.degree());
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

Integer at_one(const Series& s) {
  Integer v = 0;
  for (const auto& c : s) v += c;
  return v;
}

/// Exact division by (1 - t).
Series divide_one_minus_t(const Series& s) {
  // s = (1 - t) q  =>  q_k = s_0 + ... + s_k.
  Series q(s.size() > 0 ? s.size() - 1 : 0, 0);
  Integer acc = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    acc += s[k];
    q[k] = acc;
  }
  trim(q);
  return q;
}

}  // namespace

HilbertData hilbert_data(const std::vector<Monomial>& monomials, std::size_t nvars) {
  Series k = numerator(monomials, nvars);
  if (k.empty()) return {-1, 0};
  int c = 0;
  while (at_one(k) == 0) {
    k = divide_one_minus_t(k);
    ++c;
  }
  return {static_cast<int>(nvars) - c, at_one(k)};
}

int independent_set_dim(const std::vector<Monomial>& monomials, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& m : monomials) {
    if (m.is_one()) return -1;
    supports.push_back(m.support());
  }
  int best = 0;
  std::uint32_t limit = 1u << nvars;
  for (std::uint32_t set = 0; set < limit; ++set) {
    int size = std::popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace lenum
