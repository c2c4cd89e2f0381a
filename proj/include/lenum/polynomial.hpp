#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lenum/monomial.hpp"
#include "lenum/rational.hpp"

namespace lenum {

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q in a fixed list of named variables.
/// Terms are stored in descending graded reverse lexicographic order with no
/// zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(std::vector<std::string> vars);

  static Polynomial constant(std::vector<std::string> vars, const Rational& c);
  static Polynomial variable(std::vector<std::string> vars, std::size_t i);
  static Polynomial monomial(std::vector<std::string> vars, const Monomial& m, const Rational& c = 1);
  /// Collects like terms and drops zeros.
  static Polynomial from_terms(std::vector<std::string> vars, std::vector<Term> terms);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Smallest total degree; -1 for the zero polynomial.
  int low_degree() const;
  /// Sum of the terms of total degree d.
  Polynomial homogeneous_part(unsigned d) const;
  bool depends_on(std::size_t i) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;

  Polynomial partial(std::size_t i) const;

  /// Replaces variable i by images[i]; all images share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Same polynomial viewed in a ring whose variables are `names`; every
  /// variable actually used must appear there.
  Polynomial rename_into(const std::vector<std::string>& names) const;
  /// Sets variable i to zero and removes it from the ring.
  Polynomial drop_variable(std::size_t i) const;

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void check_same_ring(const Polynomial& o) const;

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses +, -, *, ^ (natural exponents), integer or p/q literals, declared
/// variable names and parentheses; the result is fully expanded.
Polynomial parse(std::string_view text, const std::vector<std::string>& vars);

/// Splits "x,y,z" into names, trimming whitespace.
std::vector<std::string> split_vars(std::string_view csv);

}  // namespace lenum
