#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lenum/polynomial.hpp"

namespace lenum {

using Matrix = std::vector<std::vector<Rational>>;

/// Invertible linear coordinate change z = M x. Position i of a framed
/// polynomial holds the coordinate z_i.
class Frame {
 public:
  static Frame identity(std::size_t nvars);
  /// z_i = x_{perm[i]}.
  static Frame permutation(const std::vector<std::size_t>& perm);
  /// Throws std::invalid_argument when singular or not square.
  static Frame from_matrix(Matrix m, std::optional<std::uint64_t> seed = std::nullopt);
  /// Samples the substitution x = A z with integer entries of A in
  /// [-bound, bound], rejecting singular draws, and stores M = A^{-1}.
  static Frame random(std::size_t nvars, std::uint64_t seed, std::int64_t bound = 10);

  std::size_t size() const { return matrix_.size(); }
  const Matrix& matrix() const { return matrix_; }
  /// The substitution matrix A = M^{-1}, so x = A z.
  const Matrix& inverse() const { return inverse_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  bool is_identity() const;

  Frame inverted() const;
  /// Frame for "first apply *this, then `next`" (z' = N M x).
  Frame then(const Frame& next) const;

 private:
  Frame(Matrix m, Matrix inv, std::optional<std::uint64_t> seed)
      : matrix_(std::move(m)), inverse_(std::move(inv)), seed_(seed) {}

  Matrix matrix_;
  Matrix inverse_;
  std::optional<std::uint64_t> seed_;
};

/// Exact inverse via Gauss-Jordan; nullopt when singular.
std::optional<Matrix> invert(const Matrix& m);

/// p expressed in the coordinates z of F: returns p(F^{-1} z).
Polynomial apply_frame(const Polynomial& p, const Frame& frame);

/// Order of vanishing at the origin. Throws for the zero polynomial.
unsigned mult_origin(const Polynomial& p);

/// Common total degree of all terms, or nullopt. Throws for zero.
std::optional<unsigned> homogeneous_degree(const Polynomial& p);

/// f + a z_0^m together with the rotated coordinates (z_1, ..., z_n, z_0).
std::pair<Polynomial, Frame> iomdine(const Polynomial& f, unsigned m, const Rational& a);

/// Restriction to the k-dimensional subspace V(z_0, ..., z_{n-k}) of the
/// frame; the surviving coordinates keep their names.
Polynomial restrict(const Polynomial& f, std::size_t k, const Frame& frame);
/// Restriction to a random k-dimensional subspace: each of the first
/// n+1-k variables is replaced by a random integer combination (entries in
/// [-bound, bound]) of the surviving ones.
Polynomial restrict(const Polynomial& f, std::size_t k, std::uint64_t seed, std::int64_t bound = 10);

}  // namespace lenum
