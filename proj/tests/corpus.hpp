#pragma once

#include <string>
#include <vector>

#include "lenum/frame.hpp"
#include "lenum/inequalities.hpp"
#include "lenum/random.hpp"
#include "lenum/sectional.hpp"

// Random corpus of three-variable polynomials with critical loci of dimension 0, 1 and 2,
// and the properties every member must satisfy.
namespace corpus {

using namespace lenum;

inline const std::vector<std::string> XYZ{"x", "y", "z"};

struct Member {
  std::string text;
  Polynomial f;
  int s;
};

inline std::string c(Rng& r) { return std::to_string(r.nonzero(3)); }
inline std::string e(Rng& r, int lo, int hi) { return std::to_string(r.uniform(lo, hi)); }

// Candidates aimed at critical loci of dimension `target`; some are homogeneous.
inline std::string candidate(Rng& r, int target, bool homogeneous) {
  switch (target) {
    case 0:
      if (homogeneous) {
        std::string d = e(r, 2, 4);
        return "x^" + d + "+y^" + d + "+z^" + d + "+(" + c(r) + ")*x*y*z^" + std::to_string(std::stoi(d) - 2);
      }
      return "x^" + e(r, 2, 4) + "+y^" + e(r, 2, 5) + "+z^" + e(r, 2, 4) + "+(" + c(r) + ")*x*y^" + e(r, 1, 2);
    case 1:
      if (homogeneous)
        return "z*((" + c(r) + ")*x^2+(" + c(r) + ")*x*y+(" + c(r) + ")*y^2)+(" + c(r) + ")*x^3+(" + c(r) + ")*y^3";
      return "y^" + e(r, 2, 3) + "+(" + c(r) + ")*x^" + e(r, 2, 4) + "+(" + c(r) + ")*z^" + e(r, 1, 2) + "*x^2";
    default:
      if (homogeneous)
        return "((" + c(r) + ")*x+y+(" + c(r) + ")*z)^2*(x+(" + c(r) + ")*z)";
      return "(x+(" + c(r) + ")*y)^2*(z+(" + c(r) + ")*y^2)";
  }
}

inline std::vector<Member> property_corpus() {
  Rng r(20240611);
  std::vector<Member> out;
  const int quota[3] = {12, 12, 8};
  for (int s = 0; s < 3; ++s) {
    int got = 0;
    for (int attempt = 0; got < quota[s] && attempt < 200; ++attempt) {
      std::string text = candidate(r, s, attempt % 3 == 0);
      Polynomial f = parse(text, XYZ);
      if (critical_dim(f) != s) continue;
      bool dup = false;
      for (const auto& m : out) dup = dup || m.f == f;
      if (dup) continue;
      out.push_back({text, f, s});
      ++got;
    }
  }
  return out;
}

// Semihomogeneous: the initial form alone has an isolated critical point.
inline bool semihomogeneous(const Polynomial& f) {
  Polynomial in = f.homogeneous_part(mult_origin(f));
  return critical_dim(in) == 0;
}

inline bool all_items_hold(const IneqReport& r) {
  for (const auto& it : r.items) {
    if (it.advisory || it.status == Status::Skipped) continue;
    if (!it.holds) return false;
  }
  return true;
}

/// Names of the properties that fail for m with the generic frame drawn from seed.
inline std::vector<std::string> property_failures(const Member& m, std::uint64_t seed) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const bool homog = homogeneous_degree(m.f).has_value();
  LeRecord rec = generic_le(m.f, seed, 3, 10, LeOptions{true});
  if (!rec.fully_defined()) return {"Le numbers undefined: " + rec.diagnostic};
  expect(rec.s == m.s, "s matches the critical locus");
  // gamma^1 + lambda^1 = lambda^0 of the restriction to V(z0).
  expect(rec.verified.value_or(false), "gamma^1 + lambda^1 = lambda^0 of the slice");

  // gamma^j = mult Gamma^j in generic coordinates.
  Polynomial framed = apply_frame(m.f, rec.frame);
  const Frame id = Frame::identity(m.f.nvars());
  for (std::size_t j = 1; j <= m.f.nvars(); ++j) {
    std::optional<Integer> gj =
        static_cast<int>(j) <= rec.s ? std::optional<Integer>(rec.gamma[j]) : polar_number(framed, id, j);
    expect(gj && *gj == polar_mult(framed, id, j), "gamma^" + std::to_string(j) + " = mult Gamma^" + std::to_string(j));
  }

  CheckOptions opt;
  opt.frame = rec.frame;
  opt.generic = true;
  opt.seed = seed;

  IneqReport fb = check_funbound(m.f, opt);
  expect(fb.holds, "funbound holds");
  if (homog) expect(fb.equality, "funbound equality for homogeneous f");
  if (m.s == 0) expect(fb.equality == semihomogeneous(m.f), "funbound equality iff semihomogeneous");
  if (m.s == 0) expect(check_teissier(m.f, opt).status == Status::Holds, "Teissier chain");

  IneqReport np = check_newmpr(m.f, opt);
  expect(np.status != Status::Violated && all_items_hold(np), "easybound and polar ratio bounds");
  IneqReport lg = check_lambda_gamma(m.f, opt);
  expect(lg.holds, "lambda + gamma bounds");
  if (homog) expect(lg.equality, "lambda + gamma equality for homogeneous f");
  if (homog && m.s == 1) {
    Status d = check_dagger(m.f, opt).status;
    expect(d == Status::Holds || d == Status::Skipped, "dagger on homogeneous f");
  }
  return bad;
}

}  // namespace corpus
