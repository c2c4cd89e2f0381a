#include "lenum/frame.hpp"

#include <stdexcept>

#include "lenum/random.hpp"

namespace lenum {

std::optional<Matrix> invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) return std::nullopt;
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = Rational(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

Frame Frame::identity(std::size_t nvars) {
  Matrix m(nvars, std::vector<Rational>(nvars, Rational(0)));
  for (std::size_t i = 0; i < nvars; ++i) m[i][i] = 1;
  return Frame(m, m, std::nullopt);
}

Frame Frame::permutation(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n) throw std::invalid_argument("permutation index out of range");
    m[i][perm[i]] = 1;
  }
  return from_matrix(std::move(m));
}

Frame Frame::from_matrix(Matrix m, std::optional<std::uint64_t> seed) {
  auto inv = invert(m);
  if (!inv) throw std::invalid_argument("frame matrix is singular or not square");
  return Frame(std::move(m), std::move(*inv), seed);
}

Frame Frame::random(std::size_t nvars, std::uint64_t seed, std::int64_t bound) {
  Rng rng(seed);
  for (;;) {
    Matrix a(nvars, std::vector<Rational>(nvars));
    for (auto& row : a)
      for (auto& e : row) e = rng.uniform(-bound, bound);
    if (auto m = invert(a)) return Frame(std::move(*m), std::move(a), seed);
  }
}

bool Frame::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (matrix_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

Frame Frame::inverted() const { return Frame(inverse_, matrix_, seed_); }

Frame Frame::then(const Frame& next) const {
  if (next.size() != size()) throw std::invalid_argument("frame size mismatch");
  const std::size_t n = size();
  Matrix prod(n, std::vector<Rational>(n, Rational(0)));
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        prod[i][j] += next.matrix_[i][k] * matrix_[k][j];
        inv[i][j] += inverse_[i][k] * next.inverse_[k][j];
      }
  return Frame(std::move(prod), std::move(inv), seed_ ? seed_ : next.seed_);
}

Polynomial apply_frame(const Polynomial& p, const Frame& frame) {
  if (frame.size() != p.nvars()) throw std::invalid_argument("frame dimension does not match polynomial");
  if (frame.is_identity()) return p;
  const auto& a = frame.inverse();
  std::vector<Polynomial> images;
  images.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < p.nvars(); ++j)
      if (a[i][j] != 0) terms.push_back({Monomial::variable(p.nvars(), j), a[i][j]});
    images.push_back(Polynomial::from_terms(p.vars(), std::move(terms)));
  }
  return p.substitute(images);
}

unsigned mult_origin(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("mult_origin: zero polynomial");
  return static_cast<unsigned>(p.low_degree());
}

std::optional<unsigned> homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("homogeneous_degree: zero polynomial");
  if (p.low_degree() != p.total_degree()) return std::nullopt;
  return static_cast<unsigned>(p.total_degree());
}

std::pair<Polynomial, Frame> iomdine(const Polynomial& f, unsigned m, const Rational& a) {
  if (m < 2) throw std::invalid_argument("iomdine: exponent must be at least 2");
  if (a == 0) throw std::invalid_argument("iomdine: coefficient must be nonzero");
  const std::size_t n1 = f.nvars();
  Polynomial g = f + Polynomial::monomial(f.vars(), Monomial::variable(n1, 0, m), a);
  std::vector<std::size_t> rot(n1);
  for (std::size_t i = 0; i < n1; ++i) rot[i] = (i + 1) % n1;
  return {std::move(g), Frame::permutation(rot)};
}

namespace {

Polynomial restrict_with_map(const Polynomial& f, std::size_t k,
                             const std::vector<std::vector<Rational>>& coeffs) {
  const std::size_t n1 = f.nvars();
  const std::size_t cut = n1 - k;
  std::vector<std::string> names(f.vars().begin() + static_cast<std::ptrdiff_t>(cut), f.vars().end());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n1; ++i) {
    if (i >= cut) {
      images.push_back(Polynomial::variable(names, i - cut));
      continue;
    }
    std::vector<Term> terms;
    for (std::size_t j = 0; j < k; ++j)
      if (coeffs[i][j] != 0) terms.push_back({Monomial::variable(k, j), coeffs[i][j]});
    images.push_back(Polynomial::from_terms(names, std::move(terms)));
  }
  return f.substitute(images);
}

void check_k(const Polynomial& f, std::size_t k) {
  if (k < 1 || k > f.nvars()) throw std::out_of_range("restrict: k must lie in [1, n+1]");
}

}  // namespace

Polynomial restrict(const Polynomial& f, std::size_t k, const Frame& frame) {
  check_k(f, k);
  Polynomial framed = apply_frame(f, frame);
  if (k == f.nvars()) return framed;
  std::vector<std::vector<Rational>> zero(f.nvars() - k, std::vector<Rational>(k, Rational(0)));
  return restrict_with_map(framed, k, zero);
}

Polynomial restrict(const Polynomial& f, std::size_t k, std::uint64_t seed, std::int64_t bound) {
  check_k(f, k);
  if (k == f.nvars()) return f;
  Rng rng(seed);
  std::vector<std::vector<Rational>> coeffs(f.nvars() - k, std::vector<Rational>(k));
  for (auto& row : coeffs)
    for (auto& c : row) c = rng.uniform(-bound, bound);
  return restrict_with_map(f, k, coeffs);
}

}  // namespace lenum
