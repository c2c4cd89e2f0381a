#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lenum/cycles.hpp"

namespace lenum {

/// Milnor number at the origin: 0 at a smooth point, nullopt when the
/// critical locus is positive-dimensional there. Throws std::domain_error
/// unless f(0) = 0.
std::optional<Integer> milnor(const Polynomial& f);

/// Dimension of the critical locus of f at the origin; -1 when the origin is
/// not critical.
int critical_dim(const Polynomial& f);

struct SectionalValue {
  std::optional<Integer> mu;
  std::vector<std::uint64_t> seeds;
  /// Two independent slices gave the same value.
  bool agreed = false;
};

/// Milnor number of f restricted to a generic k-dimensional linear subspace.
/// Slices are drawn in pairs until two agree; the coefficient bound doubles
/// after each disagreeing pair, at most five times, after which the smallest
/// value seen is returned. k = 0 gives 1, k = n+1 gives milnor(f), and
/// k > n+1-s gives nullopt without sampling.
SectionalValue sectional(const Polynomial& f, std::size_t k, std::uint64_t seed, std::int64_t bound = 10);

struct SectionalProfile {
  /// mu[k] for k = 0..n+1.
  std::vector<std::optional<Integer>> mu;
  std::vector<std::vector<std::uint64_t>> seeds;
  std::vector<bool> agreed;

  bool defined(std::size_t k) const { return k < mu.size() && mu[k].has_value(); }
};

SectionalProfile sectional_profile(const Polynomial& f, std::uint64_t seed, std::int64_t bound = 10);

struct TeissierChain {
  SectionalProfile profile;
  unsigned mult = 0;
  /// ratios[j] = mu[j+1] / mu[j].
  std::vector<Rational> ratios;
  /// ratios[j+1] >= ratios[j].
  std::vector<bool> monotone;
  /// mu[k+1] >= (mult - 1) mu[k].
  std::vector<bool> step_bound;
  /// mu[k+1] >= (mult - 1)^(k+1).
  std::vector<bool> power_bound;

  bool holds() const;
};

/// Throws std::domain_error unless the origin is an isolated critical point.
TeissierChain teissier_chain(const Polynomial& f, std::uint64_t seed, std::int64_t bound = 10);

/// Lê numbers of f^[k] in generic coordinates: the lexicographic minimum of
/// generic_le over `slices` random k-dimensional sections. k = n+1 is
/// generic_le(f).
LeRecord generic_slice_le(const Polynomial& f, std::size_t k, std::uint64_t seed, unsigned trials,
                          std::int64_t bound = 10, unsigned slices = 2);

}  // namespace lenum
