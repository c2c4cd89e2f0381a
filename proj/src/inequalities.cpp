#include "lenum/inequalities.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <variant>

#include "lenum/random.hpp"

namespace lenum {

namespace {

// Stream offsets keep the seeds of independent sub-computations apart.
constexpr std::uint64_t kSectionalStream = 1000;
constexpr std::uint64_t kSliceStream = 2000;
constexpr std::uint64_t kIomdineStream = 3000;

std::string str(const Integer& z) { return z.get_str(); }
std::string str(const Rational& q) { return q.get_str(); }

template <class T>
std::string list(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + str(v[i]);
  return out + "]";
}

Rational ratio(const Integer& a, const Integer& b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Integer power(const Integer& base, std::size_t e) {
  Integer out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

Integer lam(const LeRecord& r, std::size_t j) { return j < r.lambda.size() ? r.lambda[j] : Integer(0); }

IneqReport claim(std::string name, bool ok, std::string note = {}) {
  IneqReport r = compare(std::move(name), ok ? 1 : 0, 1, Relation::Equal);
  r.note = std::move(note);
  return r;
}

/// Folds the items into the verdict of `r`.
void absorb(IneqReport& r) {
  for (const auto& it : r.items) {
    if (it.advisory || it.status == Status::Skipped) continue;
    if (!it.holds) {
      r.holds = false;
      if (r.status != Status::Counterexample) r.status = Status::Violated;
    }
  }
  r.equality = r.equality && r.holds;
}

struct Framed {
  LeRecord rec;
  Polynomial f;  // f in the coordinates of rec.frame
};

/// Lê numbers in the requested frame, or a skip reason.
std::variant<Framed, std::string> framed_le(const Polynomial& f, const CheckOptions& opt) {
  try {
    LeRecord rec = opt.frame ? lambda_numbers(f, *opt.frame) : generic_le(f, opt.seed, opt.trials, opt.bound);
    if (!rec.fully_defined()) return "Lê numbers are undefined in this frame: " + rec.diagnostic;
    Polynomial g = apply_frame(f, rec.frame);
    return Framed{std::move(rec), std::move(g)};
  } catch (const std::domain_error& e) {
    return std::string(e.what());
  } catch (const std::runtime_error& e) {
    return std::string(e.what());
  }
}

void le_context(IneqReport& r, const LeRecord& rec) {
  r.add_context("s", std::to_string(rec.s));
  r.add_context("lambda", list(rec.lambda));
  r.add_context("gamma", list(rec.gamma));
  r.add_context("frame", rec.frame.is_identity() ? "identity" : "random");
  if (rec.seed) r.add_context("frame_seed", std::to_string(*rec.seed));
}

std::optional<Integer> gamma_of(const Framed& fr, std::size_t j) {
  if (j == 0) return Integer(0);
  if (static_cast<int>(j) <= fr.rec.s && fr.rec.defined[j]) return fr.rec.gamma[j];
  if (j > fr.f.nvars()) return std::nullopt;
  return polar_number(fr.f, Frame::identity(fr.f.nvars()), j);
}

/// lambda^0 of f restricted to V(z_0); nullopt when undefined.
std::optional<Integer> restricted_lambda0(const Polynomial& framed) {
  if (framed.nvars() < 2) return std::nullopt;
  Polynomial h = framed.drop_variable(0);
  if (h.is_zero() || h.constant_term() != 0) return std::nullopt;
  try {
    LeRecord r = lambda_numbers(h, Frame::identity(h.nvars()));
    if (!r.defined[0]) return std::nullopt;
    return r.lambda[0];
  } catch (const std::domain_error&) {
    return Integer(0);
  }
}

std::optional<Integer> sectional_mu(const Polynomial& f, std::size_t k, const CheckOptions& opt) {
  return sectional(f, k, derive_seed(opt.seed, kSectionalStream + k), opt.bound).mu;
}

bool nonreduced(const Polynomial& g) {
  if (g.is_constant()) return false;
  Polynomial d = g;
  for (std::size_t i = 0; i < g.nvars() && !d.is_constant(); ++i) d = gcd(d, g.partial(i));
  return !d.is_constant();
}

// ---- Lê-Iomdine -----------------------------------------------------------

IneqReport leiom_once(const Framed& fr, unsigned m, const Rational& a) {
  const Polynomial& f = fr.f;
  const LeRecord& rf = fr.rec;
  const std::size_t n1 = f.nvars();
  const std::size_t s = static_cast<std::size_t>(rf.s);
  const Frame id = Frame::identity(n1);
  auto [g, rot] = iomdine(f, m, a);

  IneqReport r;
  r.name = "leiom";
  r.relation = Relation::LessEq;
  r.add_context("m", std::to_string(m));
  r.add_context("a", str(a));
  le_context(r, rf);

  // Item 1: the critical locus of g is the slice of that of f, as germs.
  {
    Ideal jg = sigma_ideal(g);
    Ideal cut = sigma_ideal(f).with(Polynomial::variable(f.vars(), 0));
    bool forward = std::all_of(cut.gens().begin(), cut.gens().end(),
                               [&](const Polynomial& p) { return radical_member_at_origin(p, jg); });
    bool backward = std::all_of(jg.gens().begin(), jg.gens().end(),
                                [&](const Polynomial& p) { return radical_member_at_origin(p, cut); });
    r.items.push_back(claim("item1: Sigma(g) = Sigma(f) cut by V(z0)", forward && backward,
                            forward ? (backward ? "" : "Sigma(g) is larger") : "Sigma(g) is smaller"));
  }
  // Item 2.
  const int sg = local_dim(sigma_ideal(g));
  if (s >= 1)
    r.items.push_back(compare("item2: dim Sigma(g) = s - 1", sg, static_cast<int>(s) - 1, Relation::Equal));
  else
    r.items.push_back(skipped("item2: dim Sigma(g) = s - 1", "s = 0"));

  // Item 3.
  std::optional<LeRecord> rg;
  try {
    rg = lambda_numbers(g, rot);
  } catch (const std::domain_error& e) {
    r.items.push_back(claim("item3: Lê numbers of g defined", false, e.what()));
  }
  if (rg) r.items.push_back(claim("item3: Lê numbers of g defined", rg->fully_defined(), rg->diagnostic));
  if (!rg || !rg->fully_defined()) {
    r.lhs = 0;
    r.rhs = lam(rf, 0) + Integer(m - 1) * lam(rf, 1);
    r.holds = false;
    r.status = Status::Violated;
    return r;
  }
  r.add_context("lambda_g", list(rg->lambda));

  const Integer m1 = m - 1;
  const Integer g0 = lam(*rg, 0);
  const Integer bound4 = lam(rf, 0) + m1 * lam(rf, 1);

  // Item 4.
  for (std::size_t j = 1; j + 1 <= s; ++j)
    r.items.push_back(compare("item4: lambda^" + std::to_string(j) + "(g) = (m-1) lambda^" + std::to_string(j + 1) +
                                  "(f)",
                              lam(*rg, j), m1 * lam(rf, j + 1), Relation::Equal));
  r.items.push_back(compare("item4: lambda^0(g) <= lambda^0(f) + (m-1) lambda^1(f)", g0, bound4, Relation::LessEq));

  // Item 5.
  MprBounds b = mpr_bounds(f, id, rf);
  Integer threshold = b.upper1;
  if (b.upper2 && *b.upper2 < threshold) threshold = *b.upper2;
  if (b.exact) {
    Integer up;
    mpz_cdiv_q(up.get_mpz_t(), b.exact->get_num_mpz_t(), b.exact->get_den_mpz_t());
    threshold = std::min(threshold, up);
  }
  r.add_context("mpr_upper", str(threshold));
  const bool equality_required = Integer(m) >= threshold;
  if (equality_required)
    r.items.push_back(compare("item5: equality when m >= mpr bound", g0, bound4, Relation::Equal));
  else
    r.items.push_back(skipped("item5: equality when m >= mpr bound", "m is below every available bound on mpr"));

  // Item 6.
  std::optional<Integer> gamma1 = n1 >= 2 ? gamma_of(fr, 1) : std::nullopt;
  std::optional<Integer> h0 = gamma1 ? restricted_lambda0(f) : std::nullopt;
  if (gamma1 && h0) {
    r.add_context("lambda0_restricted", str(*h0));
    r.items.push_back(compare("item6: lambda^0(g) <= (m-1) lambda^0(f|V(z0))", g0, m1 * *h0, Relation::LessEq));
  } else {
    r.items.push_back(skipped("item6: lambda^0(g) <= (m-1) lambda^0(f|V(z0))", "gamma^1 or the restriction is undefined"));
  }

  IneqReport head = compare("leiom", g0, bound4, equality_required ? Relation::Equal : Relation::LessEq);
  r.lhs = head.lhs;
  r.rhs = head.rhs;
  r.relation = head.relation;
  r.holds = head.holds;
  r.equality = head.equality;
  r.status = head.status;
  absorb(r);
  return r;
}

// ---- Minkowski, several dimensions ----------------------------------------

/// Generic Lê numbers of f^[k]; f^[0] carries the convention lambda^0 = 1.
LeRecord slice_profile(const Polynomial& f, std::size_t k, const CheckOptions& opt) {
  if (k == 0) {
    LeRecord r;
    r.lambda = {1};
    r.gamma = {0};
    r.defined = {true};
    return r;
  }
  return generic_slice_le(f, k, derive_seed(opt.seed, kSliceStream + k), opt.trials, opt.bound);
}

void mainmany_core(IneqReport& r, const Framed& fr, const LeRecord& ln, const LeRecord& lm, bool advisory_identities) {
  const std::size_t s = static_cast<std::size_t>(fr.rec.s);
  const std::size_t n = fr.f.nvars() - 1;
  std::vector<Integer> k(s + 1, 0), prod(s + 1, 1);
  for (std::size_t p = 1; p <= s; ++p) {
    k[p] = lam(ln, 0);
    for (std::size_t i = 1; i < p; ++i) k[p] += lam(ln, i) * prod[i];
    prod[p] = prod[p - 1] * k[p];
  }
  Integer num = lam(fr.rec, 0), den = lam(ln, 0), rden = lam(lm, 0);
  for (std::size_t i = 1; i <= s; ++i) num += lam(fr.rec, i) * prod[i];
  for (std::size_t i = 1; i + 1 <= s; ++i) den += lam(ln, i) * prod[i];
  for (std::size_t i = 1; i + 2 <= s; ++i) rden += lam(lm, i) * prod[i];

  r.add_context("lambda_f[n]", list(ln.lambda));
  r.add_context("lambda_f[n-1]", list(lm.lambda));
  r.add_context("k", list(std::vector<Integer>(k.begin() + 1, k.end())));
  r.add_context("numerator", str(num));
  r.add_context("denominator", str(den));
  r.add_context("right_denominator", str(rden));

  auto identity = [&](std::string name, const Integer& lhs, const Integer& rhs) {
    IneqReport it = compare(std::move(name), lhs, rhs, Relation::Equal);
    it.advisory = advisory_identities;
    r.items.push_back(std::move(it));
  };
  if (s >= 1) identity("denominator = k_s", den, k[s]);
  if (auto g1 = gamma_of(fr, 1)) identity("lambda^0(f[n]) = gamma^1 + lambda^1", lam(ln, 0), *g1 + lam(fr.rec, 1));
  if (n >= 2)
    if (auto g2 = gamma_of(fr, 2)) identity("lambda^0(f[n-1]) = gamma^2 + lambda^2", lam(lm, 0), *g2 + lam(fr.rec, 2));
  for (std::size_t i = 1; i + 1 <= s; ++i)
    identity("lambda^" + std::to_string(i) + "(f[n]) = lambda^" + std::to_string(i + 1), lam(ln, i),
             lam(fr.rec, i + 1));
  if (n >= 2)
    for (std::size_t i = 1; i + 2 <= s; ++i)
      identity("lambda^" + std::to_string(i) + "(f[n-1]) = lambda^" + std::to_string(i + 2), lam(lm, i),
               lam(fr.rec, i + 2));

  if (rden == 0) {
    r.status = Status::Skipped;
    r.note = "right-hand denominator vanishes";
    return;
  }
  IneqReport head = compare(r.name, ratio(num, den), ratio(den, rden));
  r.lhs = head.lhs;
  r.rhs = head.rhs;
  r.holds = head.holds;
  r.equality = head.equality;
  r.status = head.status;
  absorb(r);
}

// ---- Families ---------------------------------------------------------------

std::string substitute_params(const std::string& templ, const std::map<std::string, long>& values) {
  std::string out;
  for (std::size_t i = 0; i < templ.size();) {
    unsigned char c = static_cast<unsigned char>(templ[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < templ.size() &&
             (std::isalnum(static_cast<unsigned char>(templ[j])) || templ[j] == '_'))
        ++j;
      std::string id = templ.substr(i, j - i);
      auto it = values.find(id);
      if (it == values.end())
        out += id;
      else
        out += it->second < 0 ? "(" + std::to_string(it->second) + ")" : std::to_string(it->second);
      i = j;
    } else {
      out += templ[i++];
    }
  }
  return out;
}

}  // namespace

const char* to_string(Relation r) {
  switch (r) {
    case Relation::GreaterEq: return ">=";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Violated: return "violated";
    case Status::Skipped: return "skipped";
    case Status::Counterexample: return "counterexample";
  }
  return "?";
}

const std::string* IneqReport::find_context(const std::string& key) const {
  for (const auto& [k, v] : context)
    if (k == key) return &v;
  return nullptr;
}

const IneqReport* IneqReport::find_item(const std::string& item) const {
  for (const auto& it : items)
    if (it.name == item) return &it;
  return nullptr;
}

IneqReport compare(std::string name, const Rational& lhs, const Rational& rhs, Relation relation) {
  IneqReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = relation;
  r.equality = lhs == rhs;
  switch (relation) {
    case Relation::GreaterEq: r.holds = lhs >= rhs; break;
    case Relation::LessEq: r.holds = lhs <= rhs; break;
    case Relation::Equal: r.holds = r.equality; break;
  }
  r.status = r.holds ? Status::Holds : Status::Violated;
  return r;
}

IneqReport skipped(std::string name, std::string why) {
  IneqReport r;
  r.name = std::move(name);
  r.status = Status::Skipped;
  r.note = std::move(why);
  return r;
}

IneqReport check_funbound(const Polynomial& f, const CheckOptions& opt) {
  auto le = framed_le(f, opt);
  if (auto* why = std::get_if<std::string>(&le)) return skipped("funbound", *why);
  const Framed& fr = std::get<Framed>(le);
  const Integer m1 = mult_origin(f) - 1;
  Integer lhs = 0;
  for (std::size_t j = 0; j < fr.rec.lambda.size(); ++j) lhs += power(m1, j) * fr.rec.lambda[j];
  IneqReport r = compare("funbound", lhs, power(m1, f.nvars()));
  le_context(r, fr.rec);
  r.add_context("mult", str(Integer(m1 + 1)));
  auto hd = homogeneous_degree(f);
  r.add_context("homogeneous", hd ? "true" : "false");
  if (hd && !r.equality) {
    r.holds = false;
    r.status = Status::Violated;
    r.note = "homogeneous input must give equality";
  }
  return r;
}

IneqReport check_leiom(const Polynomial& f, unsigned m, const Rational& a, const CheckOptions& opt) {
  if (m < 2) throw std::invalid_argument("check_leiom: m must be at least 2");
  if (a == 0) throw std::invalid_argument("check_leiom: a must be nonzero");
  auto le = framed_le(f, opt);
  if (auto* why = std::get_if<std::string>(&le)) return skipped("leiom", *why);
  return leiom_once(std::get<Framed>(le), m, a);
}

IneqReport check_leiom(const Polynomial& f, unsigned m, const CheckOptions& opt) {
  if (m < 2) throw std::invalid_argument("check_leiom: m must be at least 2");
  auto le = framed_le(f, opt);
  if (auto* why = std::get_if<std::string>(&le)) return skipped("leiom", *why);
  const Framed& fr = std::get<Framed>(le);
  IneqReport r;
  const int attempts = 8;
  for (int i = 0; i < attempts; ++i) {
    Rng rng(derive_seed(opt.seed, kIomdineStream + static_cast<std::uint64_t>(i)));
    Rational a(rng.nonzero(opt.bound));
    r = leiom_once(fr, m, a);
    r.add_context("attempts", std::to_string(i + 1));
    if (r.holds) return r;
  }
  r.note = "every sampled a failed";
  return r;
}

IneqReport check_mainone(const Polynomial& f, const CheckOptions& opt) {
  const std::string name = "mainone";
  if (f.nvars() < 2) return skipped(name, "needs n >= 1");
  auto le = framed_le(f, opt);
  if (auto* why = std::get_if<std::string>(&le)) return skipped(name, *why);
  const Framed& fr = std::get<Framed>(le);
  if (fr.rec.s > 1) return skipped(name, "critical locus has dimension " + std::to_string(fr.rec.s));
  const std::size_t n = f.nvars() - 1;
  auto mu_n = sectional_mu(f, n, opt);
  auto mu_m = sectional_mu(f, n - 1, opt);
  if (!mu_n || !mu_m || *mu_n == 0 || *mu_m == 0) return skipped(name, "sectional Milnor numbers are undefined");
  const Integer l0 = lam(fr.rec, 0), l1 = lam(fr.rec, 1);
  IneqReport r = compare(name, ratio(l0 + (*mu_n - *mu_m + 1) * l1, *mu_n), ratio(*mu_n, *mu_m));
  le_context(r, fr.rec);
  r.add_context("mu_f[n]", str(*mu_n));
  r.add_context("mu_f[n-1]", str(*mu_m));
  if (n == 1) {
    r.add_context("mu_f[0]", "1");
    r.add_context("gamma1_f[1]", "1");
  }
  return r;
}

IneqReport check_mainmany(const Polynomial& f, const CheckOptions& opt) {
  const std::string name = "mainmany";
  if (f.nvars() < 2) return skipped(name, "needs n >= 1");
  auto le = framed_le(f, opt);
  if (auto* why = std::get_if<std::string>(&le)) return skipped(name, *why);
  const Framed& fr = std::get<Framed>(le);
  const std::size_t n = f.nvars() - 1;

  IneqReport r;
  r.name = name;
  le_context(r, fr.rec);
  try {
    LeRecord ln = slice_profile(f, n, opt);
    if (lam(ln, 0) != 0) {
      r.add_context("shifted", "false");
      mainmany_core(r, fr, ln, slice_profile(f, n - 1, opt), opt.frame && !opt.generic);
      return r;
    }
    std::size_t omega = n - 1;
    while (omega >= 1 && lam(slice_profile(f, omega, opt), 0) == 0) --omega;
    if (omega == 0) return skipped(name, "lambda^0 of every slice vanishes");
    r.add_context("shifted", "true");
    r.add_context("omega", std::to_string(omega));
    r.note = "lambda^0(f[n]) = 0; applied to f[" + std::to_string(omega + 1) + "] with n = " + std::to_string(omega);

    Polynomial base = restrict(f, omega + 1, derive_seed(opt.seed, kSliceStream + omega + 1), opt.bound);
    CheckOptions sub = opt;
    sub.frame.reset();
    sub.seed = derive_seed(opt.seed, kSliceStream + 100);
    auto ble = framed_le(base, sub);
    if (auto* why = std::get_if<std::string>(&ble)) return skipped(name, *why);
    const Framed& bfr = std::get<Framed>(ble);
    r.add_context("lambda_f[omega+1]", list(bfr.rec.lambda));
    mainmany_core(r, bfr, slice_profile(base, omega, sub), slice_profile(base, omega - 1, sub), false);

    // Lê numbers of f recovered from those of the slice.
    for (std::size_t j = 0; j < fr.rec.lambda.size(); ++j) {
      Integer expect = j <= n - omega ? Integer(0) : lam(bfr.rec, j - (n - omega));
      IneqReport it = compare("lambda^" + std::to_string(j) + "(f) from the shifted slice", fr.rec.lambda[j], expect,
                              Relation::Equal);
      it.advisory = opt.frame && !opt.generic;
      r.items.push_back(std::move(it));
    }
    absorb(r);
  } catch (const std::exception& e) {
    return skipped(name, e.what());
  }
  return r;
}

IneqReport check_dagger(const Polynomial& f, const CheckOptions& opt) {
  const std::string name = "dagger";
  if (f.nvars() < 2) return skipped(name, "needs n >= 1");
  auto le = framed_le(f, opt);
  if (auto* why = std::get_if<std::string>(&le)) return skipped(name, *why);
  const Framed& fr = std::get<Framed>(le);
  if (fr.rec.s != 1) return skipped(name, "critical locus has dimension " + std::to_string(fr.rec.s));
  const std::size_t n = f.nvars() - 1;
  const Integer l0 = lam(fr.rec, 0), l1 = lam(fr.rec, 1);
  auto mu_n = sectional_mu(f, n, opt);
  auto mu_m = sectional_mu(f, n - 1, opt);
  if (!mu_n || !mu_m || *mu_n == 0 || *mu_m == 0) return skipped(name, "sectional Milnor numbers are undefined");

  IneqReport r = compare(name, ratio(l0 * (1 + l1), *mu_n), ratio(*mu_n, *mu_m));
  le_context(r, fr.rec);
  r.add_context("mu_f[n]", str(*mu_n));
  r.add_context("mu_f[n-1]", str(*mu_m));
  r.add_context("margin", str(Rational(r.lhs - r.rhs)));
  const bool candidate = *mu_n > l0 && l0 > 0;
  r.add_context("candidate", candidate ? "true" : "false");
  if (l0 == 0) {
    r.status = Status::Skipped;
    r.note = "not a candidate: lambda^0 = 0";
  } else if (!r.holds && candidate) {
    r.status = Status::Counterexample;
    r.note = "mu(f[n]) > lambda^0 > 0 and the inequality fails";
  }
  return r;
}

IneqReport check_suspension(const Polynomial& f, const CheckOptions& opt) {
  const std::string name = "suspension";
  std::string shape;
  if (f.nvars() == 2 && nonreduced(f)) {
    shape = "non-reduced plane curve";
  } else if (f.nvars() == 3) {
    for (std::size_t i = 0; i < 3 && shape.empty(); ++i) {
      Polynomial g = f.drop_variable(i).rename_into(f.vars());
      Polynomial rest = f - g;
      if (rest.size() != 1) continue;
      const Monomial& mono = rest.terms().front().mono;
      unsigned p = mono[i];
      if (p < 2 || mono.degree() != p) continue;
      if (nonreduced(g)) shape = std::to_string(p - 1) + "-fold suspension in " + f.vars()[i];
    }
  }
  if (shape.empty()) throw std::invalid_argument("check_suspension: input is neither a non-reduced plane curve nor a suspension of one");

  auto le = framed_le(f, opt);
  if (auto* why = std::get_if<std::string>(&le)) return skipped(name, *why);
  const Framed& fr = std::get<Framed>(le);
  auto mu_h = sectional_mu(f, f.nvars() - 1, opt);
  if (!mu_h) return skipped(name, "generic hyperplane section is not isolated");
  IneqReport r = compare(name, lam(fr.rec, 0), *mu_h);
  r.add_context("shape", shape);
  le_context(r, fr.rec);
  r.add_context("mu_f[n]", str(*mu_h));
  if (!r.holds) r.note = "finding: the statement is unproven";
  return r;
}

namespace {

void lambda_gamma_items(IneqReport& r, const Framed& fr, const Polynomial& f, bool generic) {
  const Integer m1 = mult_origin(f) - 1;
  const bool homogeneous = homogeneous_degree(f).has_value();
  const Frame id = Frame::identity(fr.f.nvars());
  for (std::size_t j = 0; j < fr.rec.lambda.size(); ++j) {
    std::string name = "lambda^" + std::to_string(j) + " + gamma^" + std::to_string(j) + " >= (mult-1) mult Gamma^" +
                       std::to_string(j + 1);
    Integer pm;
    try {
      pm = polar_mult(fr.f, id, j + 1);
    } catch (const std::domain_error& e) {
      r.items.push_back(skipped(name, e.what()));
      continue;
    }
    IneqReport it = compare(name, fr.rec.lambda[j] + fr.rec.gamma[j], m1 * pm);
    if (homogeneous && generic && !it.equality) {
      it.holds = false;
      it.status = Status::Violated;
      it.note = "homogeneous input in generic coordinates must give equality";
    }
    r.items.push_back(std::move(it));
  }
}

}  // namespace

IneqReport check_lambda_gamma(const Polynomial& f, const CheckOptions& opt) {
  const std::string name = "lambda_gamma";
  auto le = framed_le(f, opt);
  if (auto* why = std::get_if<std::string>(&le)) return skipped(name, *why);
  const Framed& fr = std::get<Framed>(le);
  IneqReport r;
  r.name = name;
  le_context(r, fr.rec);
  lambda_gamma_items(r, fr, f, !opt.frame || opt.generic);
  r.holds = true;
  r.status = Status::Holds;
  if (!r.items.empty()) {
    r.lhs = r.items.front().lhs;
    r.rhs = r.items.front().rhs;
    r.equality = std::all_of(r.items.begin(), r.items.end(), [](const IneqReport& i) { return i.equality; });
  }
  absorb(r);
  return r;
}

IneqReport check_newmpr(const Polynomial& f, const CheckOptions& opt, const std::vector<PolarComponent>& components) {
  const std::string name = "newmpr";
  auto le = framed_le(f, opt);
  if (auto* why = std::get_if<std::string>(&le)) return skipped(name, *why);
  const Framed& fr = std::get<Framed>(le);
  const Frame id = Frame::identity(fr.f.nvars());
  const Integer l0 = lam(fr.rec, 0);
  const Integer mult = mult_origin(f);

  IneqReport r;
  r.name = name;
  le_context(r, fr.rec);
  Integer pm;
  try {
    pm = polar_curve_mult(fr.f, id);
  } catch (const std::domain_error& e) {
    return skipped(name, e.what());
  }
  std::optional<Integer> g1 = fr.f.nvars() >= 2 ? gamma_of(fr, 1) : std::nullopt;
  const bool hyp = g1 && *g1 == pm;
  r.add_context("polar_mult", str(pm));
  if (g1) r.add_context("gamma1", str(*g1));

  std::optional<Rational> mpr;
  if (!components.empty())
    mpr = mpr_exact(fr.f, id, components);
  else if (pm == 0)
    mpr = Rational(1);
  if (mpr) r.add_context("mpr", str(*mpr));

  IneqReport bound1 = mpr ? compare("lambda^0 + 1 >= mpr", l0 + 1, *mpr) : skipped("lambda^0 + 1 >= mpr", "mpr unknown");
  r.items.push_back(bound1);
  const std::string b2 = "lambda^0 - gamma^1 + 2 >= mpr";
  if (!hyp)
    r.items.push_back(skipped(b2, "gamma^1 differs from mult Gamma^1"));
  else if (!mpr)
    r.items.push_back(skipped(b2, "mpr unknown"));
  else
    r.items.push_back(compare(b2, l0 - *g1 + 2, *mpr));
  const std::string mm = "mpr >= mult f";
  if (!hyp || *g1 == 0)
    r.items.push_back(skipped(mm, "needs gamma^1 = mult Gamma^1 != 0"));
  else if (!mpr)
    r.items.push_back(skipped(mm, "mpr unknown"));
  else
    r.items.push_back(compare(mm, *mpr, mult));
  if (hyp && *g1 != 0) r.items.push_back(compare("lambda^0 - gamma^1 + 2 >= mult f", l0 - *g1 + 2, mult));

  r.items.push_back(claim("lambda^0 != 0 iff Gamma^1 != 0", (l0 != 0) == (pm != 0)));
  if (l0 != 0) {
    Polynomial d0 = fr.f.partial(0);
    Integer md = d0.is_zero() ? Integer(0) : Integer(mult_origin(d0));
    r.items.push_back(compare("lambda^0 >= mult Gamma^1 * mult d0 f", l0, pm * md));
    r.items.push_back(compare("mult Gamma^1 * mult d0 f >= mult Gamma^1 * (mult f - 1)", pm * md, pm * (mult - 1)));
    r.items.push_back(compare("lambda^0 >= mult f - 1", l0, mult - 1));
  }
  lambda_gamma_items(r, fr, f, !opt.frame || opt.generic);

  // Without an exact mpr the headline compares lambda^0 + 1 with the best lower bound for it.
  MprBounds b = mpr_bounds(fr.f, id, fr.rec);
  IneqReport head = mpr ? bound1 : compare(name, l0 + 1, b.lower);
  r.lhs = head.lhs;
  r.rhs = head.rhs;
  r.holds = head.holds;
  r.equality = head.equality;
  r.status = head.status;
  absorb(r);
  return r;
}

IneqReport check_teissier(const Polynomial& f, const CheckOptions& opt) {
  const std::string name = "teissier";
  TeissierChain c;
  try {
    c = teissier_chain(f, opt.seed, opt.bound);
  } catch (const std::exception& e) {
    return skipped(name, e.what());
  }
  const auto& mu = c.profile.mu;
  std::vector<Integer> values;
  for (const auto& v : mu) values.push_back(*v);
  IneqReport r = compare(name, c.ratios.back(), c.ratios.front());
  r.add_context("mu", list(values));
  r.add_context("mult", std::to_string(c.mult));
  r.add_context("ratios", list(c.ratios));
  for (std::size_t j = 0; j + 1 < c.ratios.size(); ++j)
    r.items.push_back(compare("ratio " + std::to_string(j + 1) + " >= ratio " + std::to_string(j), c.ratios[j + 1],
                              c.ratios[j]));
  const Integer m1 = c.mult - 1;
  for (std::size_t k = 0; k + 1 < mu.size(); ++k) {
    r.items.push_back(compare("mu[" + std::to_string(k + 1) + "] >= (mult-1) mu[" + std::to_string(k) + "]", *mu[k + 1],
                              m1 * *mu[k]));
    r.items.push_back(
        compare("mu[" + std::to_string(k + 1) + "] >= (mult-1)^" + std::to_string(k + 1), *mu[k + 1], power(m1, k + 1)));
  }
  absorb(r);
  return r;
}

std::vector<std::pair<std::string, Polynomial>> expand(const Family& family) {
  for (const auto& [p, vals] : family.params) {
    if (std::find(family.vars.begin(), family.vars.end(), p) != family.vars.end())
      throw std::invalid_argument("family parameter '" + p + "' clashes with a variable");
    if (vals.empty()) return {};
  }
  std::vector<std::pair<std::string, Polynomial>> out;
  std::vector<std::size_t> idx(family.params.size(), 0);
  while (true) {
    std::map<std::string, long> values;
    for (std::size_t i = 0; i < idx.size(); ++i) values[family.params[i].first] = family.params[i].second[idx[i]];
    std::string text = substitute_params(family.templ, values);
    out.emplace_back(text, parse(text, family.vars));
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < family.params[pos].second.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (idx.empty()) return out;
  }
}

std::vector<SearchEntry> search_dagger(const std::vector<Family>& families, const CheckOptions& opt,
                                       std::size_t limit) {
  std::vector<SearchEntry> out;
  for (const auto& fam : families) {
    for (auto& [text, f] : expand(fam)) {
      if (limit && out.size() >= limit) break;
      IneqReport r;
      if (f.is_zero() || f.constant_term() != 0 || critical_dim(f) != 1) {
        r = skipped("dagger", "critical locus is not a curve through the origin");
      } else {
        r = check_dagger(f, opt);
      }
      out.push_back({text, fam.vars, std::move(r)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SearchEntry& a, const SearchEntry& b) {
    bool sa = a.report.status == Status::Skipped, sb = b.report.status == Status::Skipped;
    if (sa != sb) return sb;
    if (sa) return false;
    return a.report.lhs - a.report.rhs < b.report.lhs - b.report.rhs;
  });
  return out;
}

}  // namespace lenum
