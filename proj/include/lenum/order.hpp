#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lenum/monomial.hpp"

namespace lenum {

/// Monomial orders understood by the engine. Variables are ranked by their
/// position: index 0 is the largest.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, BlockElimination, LocalNegDegRevLex, HomogenizedLocal };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Elimination order for the variables in `vars`: grevlex on that block,
  /// ties broken by grevlex on the remaining variables.
  static MonomialOrder elimination(const std::vector<std::size_t>& vars);
  /// Negative degree reverse lexicographic: 1 is the largest monomial.
  static MonomialOrder local() { return MonomialOrder(Kind::LocalNegDegRevLex, 0); }
  /// Global order on k[x, t] with t the last variable: total degree first,
  /// ties broken by the local order on the x-part.
  static MonomialOrder homogenized_local() { return MonomialOrder(Kind::HomogenizedLocal, 0); }

  Kind kind() const { return kind_; }
  std::uint32_t eliminated() const { return block_; }
  bool is_global() const { return kind_ != Kind::LocalNegDegRevLex; }

  /// -1, 0, 1 as a is smaller than, equal to, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
  bool operator<(const MonomialOrder& o) const {
    return kind_ != o.kind_ ? kind_ < o.kind_ : block_ < o.block_;
  }
  std::string name() const;

 private:
  MonomialOrder(Kind k, std::uint32_t block) : kind_(k), block_(block) {}

  Kind kind_;
  std::uint32_t block_;
};

}  // namespace lenum
