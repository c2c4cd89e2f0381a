#pragma once

// Integer-coefficient polynomial kernel shared by the global (Buchberger)
// and local (Mora) standard basis computations. Polynomials are kept
// primitive and sorted descending under the active order.

#include <vector>

#include "lenum/order.hpp"
#include "lenum/polynomial.hpp"

namespace lenum::detail {

struct ZTerm {
  Monomial mono;
  Integer coeff;
};
using ZPoly = std::vector<ZTerm>;

ZPoly to_zpoly(const Polynomial& p, const MonomialOrder& order);
/// Coefficients become rationals; scaled so the leading coefficient is 1
/// when `make_monic` is set.
Polynomial from_zpoly(const ZPoly& p, const std::vector<std::string>& vars, bool make_monic);

void make_primitive(ZPoly& p);

/// Reduced Groebner basis for a global order.
std::vector<ZPoly> buchberger(const std::vector<ZPoly>& gens, const MonomialOrder& order);

/// Full reduction of h by a global basis, up to a positive scalar.
ZPoly reduce(ZPoly h, const std::vector<ZPoly>& basis, const MonomialOrder& order);

/// Standard basis for the local order via Mora's tangent cone normal form.
std::vector<ZPoly> mora(const std::vector<ZPoly>& gens, const MonomialOrder& order);

/// Standard basis for the local order by Lazard's method: a Groebner basis of
/// the homogenized generators, dehomogenized.
std::vector<ZPoly> lazard(const std::vector<ZPoly>& gens, const MonomialOrder& order);

}  // namespace lenum::detail
