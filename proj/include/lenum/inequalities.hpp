#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenum/cycles.hpp"
#include "lenum/sectional.hpp"

namespace lenum {

enum class Relation { GreaterEq, LessEq, Equal };
enum class Status { Holds, Violated, Skipped, Counterexample };

const char* to_string(Relation r);
const char* to_string(Status s);

/// Outcome of one checked statement. `holds` compares lhs with rhs under
/// `relation`; composite reports hold when every non-skipped, non-advisory
/// item holds.
struct IneqReport {
  std::string name;
  Rational lhs = 0;
  Rational rhs = 0;
  Relation relation = Relation::GreaterEq;
  bool holds = false;
  bool equality = false;
  Status status = Status::Skipped;
  /// Not counted towards the parent verdict.
  bool advisory = false;
  std::string note;
  std::vector<std::pair<std::string, std::string>> context;
  std::vector<IneqReport> items;

  void add_context(std::string key, std::string value) { context.emplace_back(std::move(key), std::move(value)); }
  const std::string* find_context(const std::string& key) const;
  const IneqReport* find_item(const std::string& name) const;
};

/// Report comparing lhs with rhs; status is Holds or Violated.
IneqReport compare(std::string name, const Rational& lhs, const Rational& rhs, Relation relation = Relation::GreaterEq);
IneqReport skipped(std::string name, std::string why);

struct CheckOptions {
  /// Coordinates for f; generic_le is used when absent.
  std::optional<Frame> frame;
  /// The supplied frame came from generic_le and counts as generic.
  bool generic = false;
  std::uint64_t seed = 0;
  unsigned trials = 3;
  std::int64_t bound = 10;
};

IneqReport check_funbound(const Polynomial& f, const CheckOptions& opt = {});

/// a is drawn as a nonzero integer in [-bound, bound], redrawn up to eight
/// times while some item fails.
IneqReport check_leiom(const Polynomial& f, unsigned m, const CheckOptions& opt = {});
/// Same with a fixed a and no retries.
IneqReport check_leiom(const Polynomial& f, unsigned m, const Rational& a, const CheckOptions& opt = {});

IneqReport check_mainone(const Polynomial& f, const CheckOptions& opt = {});
IneqReport check_mainmany(const Polynomial& f, const CheckOptions& opt = {});
IneqReport check_dagger(const Polynomial& f, const CheckOptions& opt = {});
IneqReport check_suspension(const Polynomial& f, const CheckOptions& opt = {});
IneqReport check_newmpr(const Polynomial& f, const CheckOptions& opt = {},
                        const std::vector<PolarComponent>& components = {});
/// lambda^j + gamma^j >= (mult f - 1) mult Gamma^{j+1} for every j, with
/// equality required for homogeneous f in generic coordinates.
IneqReport check_lambda_gamma(const Polynomial& f, const CheckOptions& opt = {});
IneqReport check_teissier(const Polynomial& f, const CheckOptions& opt = {});

/// Family of polynomials: `template` with each parameter name replaced by
/// every combination of the listed values.
struct Family {
  std::string templ;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::vector<long>>> params;
};

/// One member per combination, in odometer order with the last parameter
/// fastest. Throws std::invalid_argument when a parameter name is also a
/// variable.
std::vector<std::pair<std::string, Polynomial>> expand(const Family& family);

struct SearchEntry {
  std::string input;
  std::vector<std::string> vars;
  IneqReport report;
};

/// check_dagger over every member; results sorted by margin lhs - rhs,
/// skipped members last, ties kept in family order.
std::vector<SearchEntry> search_dagger(const std::vector<Family>& families, const CheckOptions& opt = {},
                                       std::size_t limit = 0);

}  // namespace lenum
