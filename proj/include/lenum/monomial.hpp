#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

namespace lenum {

/// Exponent vector with inline storage. The variable count is fixed per ring
/// and bounded by kMaxVars.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(check_nvars(nvars))) {}
  Monomial(std::size_t nvars, std::span<const unsigned> exps);

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  /// Bitmask of variables with nonzero exponent, used for quick divisibility rejects.
  std::uint32_t support() const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, other) to have been established.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const {
    return nvars_ == other.nvars_ && exps_ == other.exps_;
  }

  std::size_t hash() const;

 private:
  static std::size_t check_nvars(std::size_t n) {
    if (n > kMaxVars) throw std::invalid_argument("too many variables (max 16)");
    return n;
  }

  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic comparison: -1, 0, 1.
int grevlex_compare(const Monomial& a, const Monomial& b);

}  // namespace lenum
