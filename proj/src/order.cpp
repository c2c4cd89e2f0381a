#include "lenum/order.hpp"

#include <stdexcept>

namespace lenum {

namespace {

int revlex_tiebreak(const Monomial& a, const Monomial& b, std::uint32_t mask) {
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (!(mask & (1u << i))) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

unsigned masked_degree(const Monomial& m, std::uint32_t mask) {
  unsigned d = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (mask & (1u << i)) d += m[i];
  return d;
}

}  // namespace

MonomialOrder MonomialOrder::elimination(const std::vector<std::size_t>& vars) {
  if (vars.empty()) throw std::invalid_argument("elimination order needs a nonempty variable set");
  std::uint32_t mask = 0;
  for (auto v : vars) {
    if (v >= Monomial::kMaxVars) throw std::out_of_range("elimination variable out of range");
    mask |= (1u << v);
  }
  return MonomialOrder(Kind::BlockElimination, mask);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_compare(a, b);
    case Kind::Lex:
      for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Kind::BlockElimination: {
      unsigned da = masked_degree(a, block_), db = masked_degree(b, block_);
      if (da != db) return da > db ? 1 : -1;
      if (int c = revlex_tiebreak(a, b, block_)) return c;
      std::uint32_t rest = ~block_;
      unsigned ra = a.degree() - da, rb = b.degree() - db;
      if (ra != rb) return ra > rb ? 1 : -1;
      return revlex_tiebreak(a, b, rest);
    }
    case Kind::LocalNegDegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return revlex_tiebreak(a, b, ~0u);
    case Kind::HomogenizedLocal: {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      std::size_t t = a.nvars() - 1;
      if (a[t] != b[t]) return a[t] > b[t] ? 1 : -1;
      return revlex_tiebreak(a, b, (1u << t) - 1);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::BlockElimination: return "elimination";
    case Kind::LocalNegDegRevLex: return "negdegrevlex";
    case Kind::HomogenizedLocal: return "homogenized-negdegrevlex";
  }
  return "?";
}

}  // namespace lenum
