#include "lenum/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "lenum/random.hpp"

namespace lenum {

namespace {

std::vector<Polynomial> partials(const Polynomial& g) {
  std::vector<Polynomial> out;
  out.reserve(g.nvars());
  for (std::size_t k = 0; k < g.nvars(); ++k) out.push_back(g.partial(k));
  return out;
}

/// Index of the variable when p is a nonzero multiple of a single variable.
std::optional<std::size_t> as_variable(const Polynomial& p) {
  if (p.size() != 1 || p.terms().front().mono.degree() != 1) return std::nullopt;
  const Monomial& m = p.terms().front().mono;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] == 1) return i;
  return std::nullopt;
}

/// (dz_j g, ..., dz_n g) : (dz_0 g, ..., dz_{j-1} g)^infinity. Sets `cm` when
/// the result is a complete intersection of the expected dimension.
Ideal polar_from_partials(const std::vector<std::string>& vars, const std::vector<Polynomial>& d, std::size_t j,
                          bool* cm = nullptr) {
  if (cm) *cm = false;
  const std::size_t n1 = vars.size();
  if (j > n1) throw std::out_of_range("polar ideal index out of range");
  if (j == n1) {
    if (cm) *cm = true;
    return Ideal::zero(vars);
  }
  std::vector<Polynomial> tail(d.begin() + static_cast<std::ptrdiff_t>(j), d.end());
  Ideal p(vars, tail);
  if (p.is_zero()) {
    if (cm) *cm = true;
    return p;
  }
  std::vector<Polynomial> head;
  for (std::size_t k = 0; k < j; ++k)
    if (!d[k].is_zero()) head.push_back(d[k]);
  if (head.empty()) return Ideal::unit(vars);

  const int expected = static_cast<int>(j);
  const bool complete_intersection = dim(p) == expected && p.gens().size() == n1 - j;
  if (complete_intersection && dim(p.with(head)) < expected) {
    if (cm) *cm = true;
    return p;
  }
  std::optional<Ideal> acc;
  for (const auto& h : head) {
    Ideal part = saturate(p, h);
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

/// Lexicographic order with index s compared first.
int compare_lambda(const LeRecord& a, const LeRecord& b) {
  std::size_t len = std::max(a.lambda.size(), b.lambda.size());
  for (std::size_t k = len; k-- > 0;) {
    Integer x = k < a.lambda.size() ? a.lambda[k] : Integer(0);
    Integer y = k < b.lambda.size() ? b.lambda[k] : Integer(0);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

IntersectionResult intersect_impl(Ideal ideal, std::vector<Polynomial> forms, bool cm) {
  std::stable_sort(forms.begin(), forms.end(), [](const Polynomial& a, const Polynomial& b) {
    return as_variable(a).has_value() && !as_variable(b).has_value();
  });
  int d = static_cast<int>(forms.size());
  int ld = local_dim(ideal);
  if (ld < 0) return {Integer(0), ""};
  if (ld > d)
    return {std::nullopt, "cycle has dimension " + std::to_string(ld) + " at the origin, expected " +
                              std::to_string(d)};
  if (ld < d) return {Integer(0), ""};
  cm = cm || ideal.gens().size() <= 1;

  for (std::size_t idx = 0; idx < forms.size(); ++idx) {
    const Polynomial h = forms[idx];
    const int remaining = d - static_cast<int>(idx) - 1;
    auto var = as_variable(h);
    if (var && ideal.nvars() > 1) {
      Ideal sliced = ideal.drop_variable(*var);
      if (local_dim(sliced) > remaining)
        return {std::nullopt, "slice " + std::to_string(idx) + " meets the cycle improperly"};
      if (!cm) sliced = saturate(ideal, h).drop_variable(*var);
      ideal = sliced;
      for (std::size_t k = idx + 1; k < forms.size(); ++k) forms[k] = forms[k].drop_variable(*var);
      continue;
    }
    Ideal sliced = ideal.with(h);
    if (local_dim(sliced) > remaining)
      return {std::nullopt, "slice " + std::to_string(idx) + " meets the cycle improperly"};
    if (!cm) sliced = saturate(ideal, h).with(h);
    ideal = sliced;
  }
  auto len = local_quotient_dim(ideal);
  if (!len) return {std::nullopt, "final intersection is not isolated"};
  return {*len, ""};
}

void run_cross_check(const Polynomial& framed, LeRecord& rec) {
  if (framed.nvars() < 2) return;
  Integer gamma1, lambda1 = 0;
  if (rec.s >= 1) {
    if (!rec.defined[0] || !rec.defined[1]) return;
    gamma1 = rec.gamma[1];
    lambda1 = rec.lambda[1];
  } else {
    auto d = partials(framed);
    Ideal g1 = polar_from_partials(framed.vars(), d, 1);
    auto r = intersection_number(g1, {Polynomial::variable(framed.vars(), 0)});
    if (!r.value) return;
    gamma1 = *r.value;
  }
  Polynomial h = framed.drop_variable(0);
  if (h.is_zero()) return;
  Integer lambda0_h;
  try {
    LeRecord sub = lambda_numbers(h, Frame::identity(h.nvars()));
    if (sub.defined.empty() || !sub.defined[0]) return;
    lambda0_h = sub.lambda[0];
  } catch (const std::domain_error&) {
    // Smooth restriction: its Milnor number is 0.
    if (h.constant_term() != 0) return;
    lambda0_h = 0;
  }
  rec.verified = (lambda0_h == gamma1 + lambda1);
  if (!*rec.verified)
    rec.diagnostic += "restriction to V(z0) has lambda^0 = " + lambda0_h.get_str() + " but gamma^1 + lambda^1 = " +
                      Integer(gamma1 + lambda1).get_str() + "; ";
}

}  // namespace

bool LeRecord::fully_defined() const {
  return !defined.empty() && std::all_of(defined.begin(), defined.end(), [](bool b) { return b; });
}

Ideal sigma_ideal(const Polynomial& f) {
  if (f.is_constant()) throw std::invalid_argument("sigma_ideal: constant polynomial");
  return Ideal(f.vars(), partials(f));
}

Ideal polar_ideal(const Polynomial& f, const Frame& frame, std::size_t j) {
  if (j < 1 || j > f.nvars()) throw std::out_of_range("polar_ideal: j must lie in [1, n+1]");
  Polynomial g = apply_frame(f, frame);
  return polar_from_partials(g.vars(), partials(g), j);
}

IntersectionResult intersection_number(const Ideal& cycle, const std::vector<Polynomial>& forms) {
  for (const auto& h : forms)
    if (h.vars() != cycle.vars()) throw std::invalid_argument("intersection_number: forms live in another ring");
  return intersect_impl(cycle, forms, false);
}

LeRecord lambda_numbers(const Polynomial& f, const Frame& frame, const LeOptions& options) {
  if (f.constant_term() != 0) throw std::domain_error("f does not vanish at the origin");
  Polynomial g = apply_frame(f, frame);
  const auto& vars = g.vars();
  const std::size_t n1 = g.nvars();
  auto d = partials(g);
  Ideal jac(vars, d);
  if (!jac.origin_in_variety()) throw std::domain_error("the origin is not a critical point of f");

  LeRecord rec;
  rec.frame = frame;
  rec.seed = frame.seed();
  rec.s = local_dim(jac);
  const std::size_t s = static_cast<std::size_t>(rec.s);
  rec.lambda.assign(s + 1, Integer(0));
  rec.gamma.assign(s + 1, Integer(0));
  rec.defined.assign(s + 1, true);

  // Above s the Lê cycles vanish; the frame only needs Gamma^{j+1} . V(dz_j f) proper there.
  for (std::size_t j = n1 - 1; j > s; --j) {
    Ideal p(vars, std::vector<Polynomial>(d.begin() + static_cast<std::ptrdiff_t>(j), d.end()));
    if (local_dim(p) > static_cast<int>(j)) {
      rec.defined.assign(s + 1, false);
      rec.diagnostic += "V(dz_" + std::to_string(j) + " f, ...) has excess dimension; ";
      return rec;
    }
  }

  std::vector<Polynomial> coords;
  for (std::size_t k = 0; k < n1; ++k) coords.push_back(Polynomial::variable(vars, k));

  bool upper_cm = false;
  Ideal upper = polar_from_partials(vars, d, s + 1, &upper_cm);
  for (std::size_t j = s + 1; j-- > 0;) {
    std::vector<Polynomial> forms{d[j]};
    forms.insert(forms.end(), coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(j));
    IntersectionResult total = intersect_impl(upper, forms, upper_cm);

    bool lower_cm = false;
    std::optional<Ideal> lower;
    IntersectionResult gamma{Integer(0), ""};
    if (j > 0) {
      lower = polar_from_partials(vars, d, j, &lower_cm);
      gamma = intersect_impl(*lower,
                             std::vector<Polynomial>(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(j)),
                             lower_cm);
    }
    if (!total.value || !gamma.value) {
      rec.defined[j] = false;
      rec.diagnostic += "index " + std::to_string(j) + ": " + total.diagnostic + gamma.diagnostic + "; ";
    } else if (*total.value < *gamma.value) {
      rec.defined[j] = false;
      rec.diagnostic += "index " + std::to_string(j) + ": negative Lê number; ";
    } else {
      rec.lambda[j] = *total.value - *gamma.value;
      rec.gamma[j] = *gamma.value;
    }
    if (lower) {
      upper = *lower;
      upper_cm = lower_cm;
    }
  }
  if (options.cross_check) run_cross_check(g, rec);
  return rec;
}

bool le_lex_less(const LeRecord& a, const LeRecord& b) { return compare_lambda(a, b) < 0; }

LeRecord generic_le(const Polynomial& f, std::uint64_t seed, unsigned trials, std::int64_t bound,
                    const LeOptions& options) {
  if (trials == 0) throw std::invalid_argument("generic_le: trials must be positive");
  std::uint64_t stream = 0;
  for (int round = 0; round <= 5; ++round) {
    std::optional<LeRecord> best;
    for (unsigned t = 0; t < trials; ++t) {
      std::uint64_t sd = derive_seed(seed, stream++);
      LeRecord rec = lambda_numbers(f, Frame::random(f.nvars(), sd, bound));
      if (rec.fully_defined() && (!best || le_lex_less(rec, *best))) best = std::move(rec);
    }
    if (best) {
      if (options.cross_check) run_cross_check(apply_frame(f, best->frame), *best);
      return *best;
    }
    bound *= 2;
  }
  throw std::runtime_error("no random frame gave defined Lê numbers; try a larger coefficient bound");
}

Integer polar_curve_mult(const Polynomial& f, const Frame& frame) { return polar_mult(f, frame, 1); }

Integer polar_mult(const Polynomial& f, const Frame& frame, std::size_t j) {
  Ideal gamma = polar_ideal(f, frame, j);
  int ld = local_dim(gamma);
  if (ld < static_cast<int>(j)) return 0;
  if (ld > static_cast<int>(j))
    throw std::domain_error("Gamma^" + std::to_string(j) + " has dimension " + std::to_string(ld) + " at the origin");
  return hs_multiplicity(gamma);
}

std::optional<Integer> polar_number(const Polynomial& f, const Frame& frame, std::size_t j) {
  if (j == 0) return Integer(0);
  Polynomial g = apply_frame(f, frame);
  std::vector<Polynomial> coords;
  for (std::size_t k = 0; k < j; ++k) coords.push_back(Polynomial::variable(g.vars(), k));
  return intersection_number(polar_from_partials(g.vars(), partials(g), j), coords).value;
}

MprBounds mpr_bounds(const Polynomial& f, const Frame& frame, const LeRecord& le) {
  if (le.defined.empty() || !le.defined[0]) throw std::domain_error("mpr_bounds: lambda^0 is undefined");
  MprBounds b;
  b.upper1 = le.lambda[0] + 1;
  Integer pm = polar_curve_mult(f, frame);
  std::optional<Integer> gamma1;
  if (le.s >= 1) {
    if (le.defined[1]) gamma1 = le.gamma[1];
  } else if (f.nvars() >= 2) {
    auto r = intersection_number(polar_ideal(f, frame, 1), {Polynomial::variable(f.vars(), 0)});
    gamma1 = r.value;
  }
  if (gamma1 && *gamma1 == pm) {
    b.upper2 = le.lambda[0] - *gamma1 + 2;
    if (*gamma1 != 0) b.lower = mult_origin(f);
  }
  if (pm == 0) b.exact = Rational(1);
  return b;
}

MprBounds mpr_bounds(const Polynomial& f, const Frame& frame) { return mpr_bounds(f, frame, lambda_numbers(f, frame)); }

Rational mpr_exact(const Polynomial& f, const Frame& frame, const std::vector<PolarComponent>& components) {
  Polynomial g = apply_frame(f, frame);
  Integer pm = polar_curve_mult(f, frame);
  if (components.empty()) {
    if (pm != 0) throw std::invalid_argument("mpr_exact: the polar curve is not empty");
    return 1;
  }
  Ideal gamma1 = polar_ideal(f, frame, 1);
  Integer total = 0;
  Rational best = 0;
  Polynomial z0 = Polynomial::variable(g.vars(), 0);
  for (const auto& c : components) {
    if (c.ideal.vars() != g.vars()) throw std::invalid_argument("mpr_exact: component lives in another ring");
    if (c.multiplicity == 0) throw std::invalid_argument("mpr_exact: zero multiplicity");
    if (local_dim(c.ideal) != 1) throw std::invalid_argument("mpr_exact: component is not a curve through the origin");
    if (!c.ideal.contains(gamma1)) throw std::invalid_argument("mpr_exact: component does not lie on the polar curve");
    total += c.multiplicity * hs_multiplicity(c.ideal);
    Rational ratio = 1;
    if (!c.ideal.contains(z0)) {
      auto num = intersection_number(c.ideal, {g});
      auto den = intersection_number(c.ideal, {z0});
      if (!num.value || !den.value || *den.value == 0)
        throw std::invalid_argument("mpr_exact: improper intersection on a component");
      ratio = Rational(*num.value, *den.value);
      ratio.canonicalize();
    }
    best = std::max(best, ratio);
  }
  if (total != pm)
    throw std::invalid_argument("mpr_exact: components add up to multiplicity " + total.get_str() + ", polar curve has " +
                                pm.get_str());
  return best;
}

}  // namespace lenum
