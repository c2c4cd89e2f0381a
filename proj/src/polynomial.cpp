#include "lenum/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lenum {

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

void validate_vars(const std::vector<std::string>& vars) {
  if (vars.empty()) throw std::invalid_argument("a polynomial ring needs at least one variable");
  if (vars.size() > Monomial::kMaxVars) throw std::invalid_argument("too many variables (max 16)");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: " + v);
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) { validate_vars(vars_); }

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c) {
  Polynomial p(std::move(vars));
  if (c != 0) p.terms_.push_back({Monomial(p.nvars()), c});
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, std::size_t i) {
  Polynomial p(std::move(vars));
  p.terms_.push_back({Monomial::variable(p.nvars(), i), 1});
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(vars));
  if (m.nvars() != p.nvars()) throw std::invalid_argument("monomial arity mismatch");
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
  Polynomial p(std::move(vars));
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (auto& t : terms) {
    if (t.mono.nvars() != p.nvars()) throw std::invalid_argument("monomial arity mismatch");
    t.coeff.canonicalize();
    acc[t.mono] += t.coeff;
  }
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  return p;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex_compare(t.mono, x) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

int Polynomial::low_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.degree());
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial r(vars_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) r.terms_.push_back(t);
  return r;
}

bool Polynomial::depends_on(std::size_t i) const {
  return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.mono[i] != 0; });
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(vars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    int c = grevlex_compare(a->mono, b->mono);
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (s != 0) r.terms_.push_back({a->mono, s});
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, o.terms_.end());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  Polynomial r(vars_);
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, c});
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(vars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::partial(std::size_t i) const {
  if (i >= nvars()) throw std::out_of_range("partial: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Differentiation keeps distinct monomials distinct, but the order may change.
  Polynomial r(vars_);
  r.terms_ = std::move(out);
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars()) throw std::invalid_argument("substitute: wrong number of images");
  const auto& target = images.front().vars();
  for (const auto& im : images) im.check_same_ring(images.front());

  // Cache powers of each image; substitution is dominated by these products.
  std::vector<std::vector<Polynomial>> powers(nvars());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < nvars(); ++i)
      if (t.mono[i] != 0) prod = prod * power(i, t.mono[i]);
    for (const auto& u : prod.terms_) acc[u.mono] += u.coeff;
  }
  Polynomial r(target);
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, c});
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

Polynomial Polynomial::rename_into(const std::vector<std::string>& names) const {
  std::vector<int> where(nvars(), -1);
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(names.begin(), names.end(), vars_[i]);
    if (it != names.end()) where[i] = static_cast<int>(it - names.begin());
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(names.size());
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (where[i] < 0) throw std::invalid_argument("rename_into: variable " + vars_[i] + " missing in target");
      m.set(static_cast<std::size_t>(where[i]), t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(names, std::move(out));
}

Polynomial Polynomial::drop_variable(std::size_t i) const {
  if (i >= nvars()) throw std::out_of_range("drop_variable: index out of range");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < nvars(); ++k)
    if (k != i) names.push_back(vars_[k]);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[i] != 0) continue;
    Monomial m(names.size());
    for (std::size_t k = 0, j = 0; k < nvars(); ++k)
      if (k != i) m.set(j++, t.mono[k]);
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(names), std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * (Rational(1) / terms_.front().coeff);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars(); ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace lenum
