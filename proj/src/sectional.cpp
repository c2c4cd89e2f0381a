#include "lenum/sectional.hpp"

#include <algorithm>
#include <stdexcept>

#include "lenum/random.hpp"

namespace lenum {

namespace {

bool smooth_at_origin(const Polynomial& f) {
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (f.partial(i).constant_term() != 0) return true;
  return false;
}

}  // namespace

std::optional<Integer> milnor(const Polynomial& f) {
  if (f.constant_term() != 0) throw std::domain_error("milnor: f does not vanish at the origin");
  if (f.is_zero()) return std::nullopt;
  if (smooth_at_origin(f)) return Integer(0);
  return local_quotient_dim(sigma_ideal(f));
}

int critical_dim(const Polynomial& f) {
  if (f.is_zero()) return static_cast<int>(f.nvars());
  if (f.is_constant() || smooth_at_origin(f)) return -1;
  return local_dim(sigma_ideal(f));
}

SectionalValue sectional(const Polynomial& f, std::size_t k, std::uint64_t seed, std::int64_t bound) {
  const std::size_t n1 = f.nvars();
  if (k > n1) throw std::out_of_range("sectional: k exceeds the number of variables");
  if (f.constant_term() != 0) throw std::domain_error("sectional: f does not vanish at the origin");
  SectionalValue out;
  if (k == 0) {
    out.mu = Integer(1);
    out.agreed = true;
    return out;
  }
  if (k == n1) {
    out.mu = milnor(f);
    out.agreed = true;
    return out;
  }
  const int s = critical_dim(f);
  if (s >= 0 && static_cast<int>(k) > static_cast<int>(n1) - s) return out;

  std::optional<Integer> least;
  std::uint64_t stream = 0;
  for (int round = 0; round <= 5; ++round, bound *= 2) {
    std::optional<Integer> pair[2];
    for (auto& v : pair) {
      std::uint64_t sd = derive_seed(seed, stream++);
      out.seeds.push_back(sd);
      v = milnor(restrict(f, k, sd, bound));
      if (v && (!least || *v < *least)) least = v;
    }
    if (pair[0] && pair[1] && *pair[0] == *pair[1]) {
      out.mu = pair[0];
      out.agreed = true;
      return out;
    }
  }
  out.mu = least;
  return out;
}

SectionalProfile sectional_profile(const Polynomial& f, std::uint64_t seed, std::int64_t bound) {
  SectionalProfile p;
  for (std::size_t k = 0; k <= f.nvars(); ++k) {
    SectionalValue v = sectional(f, k, derive_seed(seed, k), bound);
    p.mu.push_back(v.mu);
    p.seeds.push_back(std::move(v.seeds));
    p.agreed.push_back(v.agreed);
  }
  return p;
}

bool TeissierChain::holds() const {
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return all(monotone) && all(step_bound) && all(power_bound);
}

TeissierChain teissier_chain(const Polynomial& f, std::uint64_t seed, std::int64_t bound) {
  if (f.constant_term() != 0) throw std::domain_error("teissier_chain: f does not vanish at the origin");
  const int s = critical_dim(f);
  if (s < 0) throw std::domain_error("teissier_chain: the origin is not a critical point");
  if (s > 0) throw std::domain_error("teissier_chain: the critical locus is " + std::to_string(s) + "-dimensional");

  TeissierChain c;
  c.mult = mult_origin(f);
  c.profile = sectional_profile(f, seed, bound);
  for (std::size_t k = 0; k < c.profile.mu.size(); ++k)
    if (!c.profile.mu[k]) throw std::runtime_error("teissier_chain: mu(f^[" + std::to_string(k) + "]) is undefined");
  const auto& mu = c.profile.mu;
  const Integer m1 = c.mult - 1;
  Integer power = 1;
  for (std::size_t j = 0; j + 1 < mu.size(); ++j) {
    Rational r(*mu[j + 1], *mu[j]);
    r.canonicalize();
    c.ratios.push_back(r);
    power *= m1;
    c.step_bound.push_back(*mu[j + 1] >= m1 * *mu[j]);
    c.power_bound.push_back(*mu[j + 1] >= power);
  }
  for (std::size_t j = 0; j + 1 < c.ratios.size(); ++j) c.monotone.push_back(c.ratios[j + 1] >= c.ratios[j]);
  return c;
}

LeRecord generic_slice_le(const Polynomial& f, std::size_t k, std::uint64_t seed, unsigned trials,
                          std::int64_t bound, unsigned slices) {
  if (k < 1 || k > f.nvars()) throw std::out_of_range("generic_slice_le: k must lie in [1, n+1]");
  if (k == f.nvars()) return generic_le(f, seed, trials, bound);
  std::optional<LeRecord> best;
  std::optional<std::runtime_error> last;
  for (unsigned i = 0; i < std::max(1u, slices); ++i) {
    Polynomial slice = restrict(f, k, derive_seed(seed, 2 * i), bound);
    try {
      LeRecord rec = generic_le(slice, derive_seed(seed, 2 * i + 1), trials, bound);
      if (!best || le_lex_less(rec, *best)) best = std::move(rec);
    } catch (const std::runtime_error& e) {
      last = e;
    }
  }
  if (!best) throw *last;
  return *best;
}

}  // namespace lenum
