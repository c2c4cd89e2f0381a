#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenum/frame.hpp"
#include "lenum/groebner.hpp"

namespace lenum {

/// Lê numbers and relative polar numbers of f at the origin for one frame.
/// lambda[j] and gamma[j] are meaningful only where defined[j] is set;
/// gamma[0] is always 0.
struct LeRecord {
  int s = 0;
  std::vector<Integer> lambda;
  std::vector<Integer> gamma;
  std::vector<bool> defined;
  Frame frame = Frame::identity(1);
  std::optional<std::uint64_t> seed;
  /// Result of comparing gamma^1 + lambda^1 with lambda^0 of the restriction
  /// to V(z_0); nullopt when not run or not computable.
  std::optional<bool> verified;
  std::string diagnostic;

  bool fully_defined() const;
};

struct IntersectionResult {
  std::optional<Integer> value;
  std::string diagnostic;
};

struct MprBounds {
  Integer lower = 1;
  Integer upper1;
  std::optional<Integer> upper2;
  std::optional<Rational> exact;
};

/// Ideal of the partial derivatives of f.
Ideal sigma_ideal(const Polynomial& f);

/// Ideal whose cycle is the relative polar cycle Gamma^j of f in the frame:
/// (dz_j f, ..., dz_n f) with components inside the critical locus removed.
/// Gamma^{n+1} is the zero ideal.
Ideal polar_ideal(const Polynomial& f, const Frame& frame, std::size_t j);

/// Intersection number at the origin of the cycle of `cycle` (pure of
/// dimension forms.size() near 0) with the hypersurfaces V(h). Undefined when
/// the intersection is not isolated at the origin.
IntersectionResult intersection_number(const Ideal& cycle, const std::vector<Polynomial>& forms);

struct LeOptions {
  /// Also compute lambda^0 of f restricted to V(z_0) and compare.
  bool cross_check = false;
};

/// Lê numbers in the given frame. Throws std::domain_error unless f(0) = 0 and
/// the origin is a critical point.
LeRecord lambda_numbers(const Polynomial& f, const Frame& frame, const LeOptions& options = {});

/// Lê numbers in generic coordinates: the lexicographic minimum (lambda^s
/// first) over `trials` random frames. The coefficient bound doubles, at most
/// five times, while no trial is fully defined.
LeRecord generic_le(const Polynomial& f, std::uint64_t seed, unsigned trials, std::int64_t bound = 10,
                    const LeOptions& options = {});

/// True when a is lexicographically smaller than b, comparing lambda^s first.
bool le_lex_less(const LeRecord& a, const LeRecord& b);

/// Hilbert-Samuel multiplicity of Gamma^1 at the origin; 0 when empty.
Integer polar_curve_mult(const Polynomial& f, const Frame& frame);
/// Multiplicity at the origin of the j-dimensional cycle Gamma^j; 0 when it
/// misses the origin. Throws std::domain_error on excess dimension.
Integer polar_mult(const Polynomial& f, const Frame& frame, std::size_t j);
/// gamma^j = (Gamma^j . V(z_0, ..., z_{j-1}))_0; gamma^0 = 0. nullopt when
/// the intersection is improper.
std::optional<Integer> polar_number(const Polynomial& f, const Frame& frame, std::size_t j);

MprBounds mpr_bounds(const Polynomial& f, const Frame& frame, const LeRecord& le);
MprBounds mpr_bounds(const Polynomial& f, const Frame& frame);

/// A prime one-dimensional component of Gamma^1, in framed coordinates, with
/// its coefficient in the cycle.
struct PolarComponent {
  Ideal ideal;
  unsigned multiplicity = 1;
};

/// Maximum polar ratio from a user-supplied decomposition of Gamma^1. Throws
/// std::invalid_argument when the components do not add up to Gamma^1.
Rational mpr_exact(const Polynomial& f, const Frame& frame, const std::vector<PolarComponent>& components);

}  // namespace lenum
