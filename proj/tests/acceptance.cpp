// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "corpus.hpp"
#include "lenum/frame.hpp"
#include "lenum/groebner.hpp"
#include "lenum/inequalities.hpp"
#include "lenum/report_json.hpp"
#include "lenum/sectional.hpp"

using namespace lenum;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> TXY{"t", "x", "y"};
const std::vector<std::string> WXYZ{"w", "x", "y", "z"};

Polynomial P(const char* s, const std::vector<std::string>& v) { return parse(s, v); }

Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

CheckOptions framed(const Frame& f) {
  CheckOptions o;
  o.frame = f;
  return o;
}

CheckOptions seeded(std::uint64_t seed) {
  CheckOptions o;
  o.seed = seed;
  return o;
}

// Collects failed expectations of one criterion.
struct Probe {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int failed = 0;

void criterion(const std::string& id, double limit_s, const std::function<std::string(Probe&)>& body) {
  Probe p;
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  try {
    detail = body(p);
  } catch (const std::exception& e) {
    p.failures.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) p.failures.push_back("over the time limit of " + std::to_string(limit_s) + " s");
  const bool ok = p.failures.empty();
  if (!ok) ++failed;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (ok ? "PASS " : "FAIL ") << id << " [" << secs << " s]";
  if (!detail.empty()) line << " " << detail;
  for (const auto& f : p.failures) line << " | " << f;
  std::cout << line.str() << std::endl;
}

// Standard monomials of a zero-dimensional monomial ideal, counted inside the
// box given by its pure powers.
long standard_count(const std::vector<Monomial>& leads, std::size_t nvars) {
  std::vector<unsigned> box(nvars, 0);
  for (const auto& m : leads)
    for (std::size_t i = 0; i < nvars; ++i)
      if (m.degree() == m[i] && m[i] > 0 && (box[i] == 0 || m[i] < box[i])) box[i] = m[i];
  for (unsigned b : box)
    if (b == 0) return -1;
  long count = 0;
  std::vector<unsigned> e(nvars, 0);
  for (;;) {
    Monomial m(nvars, e);
    bool in = false;
    for (const auto& g : leads) in = in || g.divides(m);
    if (!in) ++count;
    std::size_t i = 0;
    while (i < nvars && ++e[i] == box[i]) e[i++] = 0;
    if (i == nvars) return count;
  }
}

Ideal I(const std::vector<std::string>& vars, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse(s, vars));
  return Ideal(vars, g);
}

std::string run_cli(const std::string& args) {
  std::string cmd = "'" LENUM_CLI_PATH "' " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out += "\nexit " + std::to_string(status);
  return out;
}

}  // namespace

int main() {
  criterion("1 cone times a line: lambda = (2, 3), funbound 8 = 8", 5, [](Probe& p) {
    Polynomial f = P("(x^2-z^2+y^2)*(x-z)", XYZ);
    LeRecord le = lambda_numbers(f, Frame::identity(3));
    p.expect(le.fully_defined() && le.lambda == std::vector<Integer>{2, 3}, "lambda^0 = 2 and lambda^1 = 3");
    IneqReport r = check_funbound(f, framed(Frame::identity(3)));
    p.expect(r.holds && r.equality && r.lhs == 2 + 2 * 3 && r.rhs == 8, "2 + 2*3 = 8");
    return "funbound " + r.lhs.get_str() + " = " + r.rhs.get_str();
  });

  criterion("2 y^3-x^4-t^2x^2: lambda = (12, 2), funbound 16 > 8", 5, [](Probe& p) {
    Polynomial f = P("y^3-x^4-t^2*x^2", TXY);
    LeRecord le = lambda_numbers(f, Frame::identity(3));
    p.expect(le.fully_defined() && le.lambda == std::vector<Integer>{12, 2}, "lambda^0 = 12 and lambda^1 = 2");
    IneqReport r = check_funbound(f, framed(Frame::identity(3)));
    p.expect(r.holds && !r.equality && r.lhs == 16 && r.rhs == 8, "16 > 8");
    return "funbound " + r.lhs.get_str() + " >= " + r.rhs.get_str();
  });

  criterion("3a mainone on y^3-x^4-t^2x^2: 11/3 >= 3", 30, [](Probe& p) {
    IneqReport r = check_mainone(P("y^3-x^4-t^2*x^2", TXY), seeded(1));
    p.expect(r.status == Status::Holds, "holds");
    p.expect(r.find_context("mu_f[n]") && *r.find_context("mu_f[n]") == "6", "mu(f[2]) = 6");
    p.expect(r.find_context("mu_f[n-1]") && *r.find_context("mu_f[n-1]") == "2", "mu(f[1]) = 2");
    p.expect(r.lhs == Q(11, 3) && r.rhs == 3, "11/3 >= 3");
    return r.lhs.get_str() + " >= " + r.rhs.get_str();
  });

  criterion("3b mainone on the cone times a line: 11/4 >= 2", 30, [](Probe& p) {
    IneqReport r = check_mainone(P("(x^2-z^2+y^2)*(x-z)", XYZ), seeded(1));
    p.expect(r.status == Status::Holds, "holds");
    p.expect(r.find_context("mu_f[n]") && *r.find_context("mu_f[n]") == "4", "mu(f[2]) = 4");
    p.expect(r.find_context("mu_f[n-1]") && *r.find_context("mu_f[n-1]") == "2", "mu(f[1]) = 2");
    p.expect(r.lhs == Q(11, 4) && r.rhs == 2, "11/4 >= 2");
    return r.lhs.get_str() + " >= " + r.rhs.get_str();
  });

  criterion("4 mainmany on z^2+(w^4+x^3+y^2)^2: 179/15 >= 5", 300, [](Probe& p) {
    Polynomial f = P("z^2+(w^4+x^3+y^2)^2", WXYZ);
    IneqReport r = check_mainmany(f, seeded(1));
    auto ctx = [&](const char* k) { return r.find_context(k) ? *r.find_context(k) : std::string("?"); };
    p.expect(r.status == Status::Holds, "holds");
    p.expect(ctx("lambda") == "[14,3,2]", "lambda = (14, 3, 2)");
    p.expect(ctx("lambda_f[n]") == "[5,2]", "lambda of f[3] = (5, 2)");
    p.expect(sectional(f, 2, 1).mu == Integer(3), "mu(f[2]) = 3");
    p.expect(ctx("k") == "[5,15]", "k = (5, 15)");
    p.expect(r.lhs == Q(179, 15) && r.rhs == 5, "179/15 >= 5");
    for (const auto& it : r.items) p.expect(it.holds, it.name);
    return r.lhs.get_str() + " >= " + r.rhs.get_str() + ", k = " + ctx("k");
  });

  criterion("5 Le-Iomdine: 26 = 2 + 8*3 at m = 9, bound at m = 2, isolated case", 120, [](Probe& p) {
    Polynomial f = P("(x^2-z^2+y^2)*(x-z)", XYZ);
    IneqReport r9 = check_leiom(f, 9, framed(Frame::identity(3)));
    p.expect(r9.status == Status::Holds && r9.relation == Relation::Equal && r9.lhs == 26 && r9.rhs == 2 + 8 * 3,
             "lambda^0(g) = 26 with equality");
    Rational a(*r9.find_context("a"));
    auto [g, rot] = iomdine(f, 9, a);
    LeRecord lg = lambda_numbers(g, rot);
    p.expect(lg.fully_defined() && lg.lambda[0] == r9.lhs, "recomputed lambda^0(g)");
    IneqReport r2 = check_leiom(f, 2, framed(Frame::identity(3)));
    const IneqReport* item4 = r2.find_item("item4: lambda^0(g) <= lambda^0(f) + (m-1) lambda^1(f)");
    p.expect(r2.holds && item4 && item4->holds, "item 4 at m = 2");
    Polynomial cusp = P("x^2+y^3", XY);
    for (unsigned m : {3u, 4u}) {
      IneqReport ri = check_leiom(cusp, m, framed(Frame::identity(2)));
      p.expect(ri.holds && ri.lhs == 2, "mu(x^2+y^3+a x^" + std::to_string(m) + ") = 2");
    }
    return "m=9: " + r9.lhs.get_str() + "; m=2: " + r2.lhs.get_str() + " <= " + r2.rhs.get_str();
  });

  criterion("6 property suites over the random corpus", 1800, [](Probe& p) {
    auto members = corpus::property_corpus();
    int per_s[3] = {0, 0, 0};
    for (const auto& m : members) ++per_s[m.s];
    p.expect(members.size() >= 20, "at least 20 members");
    int runs = 0;
    for (const auto& m : members)
      for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        ++runs;
        for (const auto& f : corpus::property_failures(m, seed))
          p.failures.push_back(m.text + " seed " + std::to_string(seed) + ": " + f);
      }
    return std::to_string(members.size()) + " members (s=0: " + std::to_string(per_s[0]) +
           ", s=1: " + std::to_string(per_s[1]) + ", s=2: " + std::to_string(per_s[2]) + "), " +
           std::to_string(runs) + " runs";
  });

  criterion("7 local lengths: Mora basis against primary extraction, mu(x^a+y^b)", 120, [](Probe& p) {
    std::vector<Ideal> ideals{
        I(XY, {"x^2", "y^3"}),
        I(XY, {"x^2+y^3", "x*y"}),
        I(XY, {"x^3-y^2+x^4", "x*y^2"}),
        I(XY, {"y-x^2", "y^2-x^3"}),
        I(XY, {"y^2-x^3", "2*y", "-3*x^2"}),
        I(XY, {"x^2+y^2-y^3", "x*y*(1+x)"}),
        I(XYZ, {"x^2+y*z", "y^2+x*z", "z^2+x*y"}),
        I(XYZ, {"x*y", "y*z", "x*z", "x^2+y^2+z^2"}),
        I(XYZ, {"x^3+z", "y^2-z^2", "x*y*z+z^3"}),
        I(XYZ, {"x+y^2+z^3", "y+z^2", "z^4+x^5"}),
    };
    for (int a = 2; a <= 6; ++a)
      for (int b = 2; b <= 6; ++b) {
        std::string f = "x^" + std::to_string(a) + "+y^" + std::to_string(b);
        Polynomial pf = parse(f, XY);
        ideals.push_back(sigma_ideal(pf));
        p.expect(milnor(pf) == Integer((a - 1) * (b - 1)), "mu(" + f + ")");
      }
    int checked = 0;
    for (const auto& id : ideals) {
      auto oracle = local_length_via_primary_component(id);
      if (!oracle) continue;
      ++checked;
      Basis mora = mora_standard_basis(id);
      long from_mora = standard_count(mora.leads, id.nvars());
      p.expect(Integer(from_mora) == *oracle, "Mora length of ideal " + std::to_string(checked));
      p.expect(local_quotient_dim(id) == oracle, "local_quotient_dim of ideal " + std::to_string(checked));
    }
    p.expect(checked == static_cast<int>(ideals.size()), "every corpus ideal is zero-dimensional at 0");
    return std::to_string(checked) + " ideals";
  });

  criterion("8 determinism: identical seeds give byte-identical JSON", 120, [](Probe& p) {
    auto doc = []() {
      Polynomial f = P("y^3-x^4-t^2*x^2", TXY);
      Json j;
      j["le"] = to_json(generic_le(f, 42, 3));
      j["mainone"] = to_json(check_mainone(f, seeded(42)));
      j["newmpr"] = to_json(check_newmpr(f, seeded(42)));
      return j.dump();
    };
    p.expect(doc() == doc(), "library reports");
    const std::string args = "check mainone -f 'y^3-x^4-t^2*x^2' --vars t,x,y --seed 42 --json";
    std::string a = run_cli(args), b = run_cli(args);
    p.expect(!a.empty() && a == b, "CLI output");
    return std::to_string(a.size()) + " bytes";
  });

  criterion("dagger search over the exponent grid: no counterexamples", 0, [](Probe& p) {
    Family grid{"y^a-x^b-t^c*x^d", TXY, {{"a", {2, 3, 4, 5}}, {"b", {3, 4, 5, 6, 7}}, {"c", {1, 2, 3}}, {"d", {2, 3}}}};
    auto entries = search_dagger({grid}, seeded(1));
    std::ofstream log("dagger_margins.jsonl");
    int checked = 0, skipped = 0, counter = 0;
    Rational least;
    for (const auto& e : entries) {
      Json line;
      line["input"] = e.input;
      line["status"] = to_string(e.report.status);
      if (e.report.status == Status::Skipped) {
        ++skipped;
        line["note"] = e.report.note;
      } else {
        Rational margin = e.report.lhs - e.report.rhs;
        line["margin"] = margin.get_str();
        if (checked == 0 || margin < least) least = margin;
        ++checked;
      }
      if (e.report.status == Status::Counterexample) ++counter;
      log << line.dump() << "\n";
    }
    p.expect(entries.size() == 4 * 5 * 3 * 2, "every member visited");
    p.expect(counter == 0, std::to_string(counter) + " counterexamples");
    return std::to_string(entries.size()) + " members, " + std::to_string(checked) + " checked, " +
           std::to_string(skipped) + " skipped, " + std::to_string(counter) + " counterexamples, least margin " +
           least.get_str() + " (margins in dagger_margins.jsonl)";
  });

  return failed == 0 ? 0 : 1;
}
