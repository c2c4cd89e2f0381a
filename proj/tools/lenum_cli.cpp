#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lenum/report_json.hpp"

#ifndef LENUM_VERSION
#define LENUM_VERSION "0.0.0"
#endif

using namespace lenum;

namespace {

enum Exit { kOk = 0, kInputError = 1, kUndefined = 2, kFinding = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string poly;
  std::string vars;
  std::string frame = "random";
  std::uint64_t seed = 0;
  bool entropy = false;
  unsigned trials = 3;
  std::int64_t bound = 10;
  bool json = false;
  std::string out;
  int k = -1;
  unsigned m = 0;
  std::string a;
  std::vector<std::string> components;
  std::string family;
  std::size_t limit = 0;
};

void add_common(CLI::App* cmd, Config& cfg, bool needs_poly = true) {
  if (needs_poly) {
    cmd->add_option("-f,--poly", cfg.poly, "polynomial, e.g. \"(x^2-z^2+y^2)*(x-z)\"")->required();
    cmd->add_option("--vars", cfg.vars, "comma-separated variable names in coordinate order")->required();
  } else {
    cmd->add_option("--vars", cfg.vars, "variables for family members without their own list");
  }
  cmd->add_option("--frame", cfg.frame, "identity, random, or a JSON file holding {\"matrix\": [[...]]}")
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "seed for random frames and slices (env LENUM_SEED)")->capture_default_str();
  cmd->add_flag("--entropy", cfg.entropy, "draw the seed from the system entropy source");
  cmd->add_option("--trials", cfg.trials, "random frames per round")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--bound", cfg.bound, "initial coefficient bound")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_flag("--json", cfg.json, "emit JSON");
  cmd->add_option("--out", cfg.out, "write the report to this file");
}

Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("not a rational number: '" + text + "'");
  }
}

Frame load_frame(const std::string& mode, std::size_t nvars) {
  if (mode == "identity") return Frame::identity(nvars);
  std::ifstream in(mode);
  if (!in) throw InputError("cannot open frame file '" + mode + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(std::string("frame file: ") + e.what());
  }
  if (!j.contains("matrix") || !j["matrix"].is_array()) throw InputError("frame file lacks a \"matrix\" array");
  Matrix m;
  for (const auto& row : j["matrix"]) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(parse_rational(e.is_string() ? e.get<std::string>() : e.dump()));
    m.push_back(std::move(r));
  }
  if (m.size() != nvars) throw InputError("frame matrix must be " + std::to_string(nvars) + " x " + std::to_string(nvars));
  try {
    return Frame::from_matrix(std::move(m));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

/// The Lê numbers a command works with, plus the frame they were taken in.
LeRecord le_for(const Polynomial& f, const Config& cfg, bool cross_check) {
  LeOptions lo{cross_check};
  if (cfg.frame == "random") return generic_le(f, cfg.seed, cfg.trials, cfg.bound, lo);
  return lambda_numbers(f, load_frame(cfg.frame, f.nvars()), lo);
}

Json doc_skeleton(const std::string& poly, const std::vector<std::string>& vars) {
  Json d;
  d["input"] = {{"f", poly}, {"vars", vars}};
  d["frame"] = nullptr;
  d["le"] = nullptr;
  d["sectional"] = Json::array();
  d["checks"] = Json::array();
  d["version"] = LENUM_VERSION;
  return d;
}

std::string lambda_line(const LeRecord& r) {
  std::ostringstream os;
  for (std::size_t j = r.lambda.size(); j-- > 0;) {
    os << "lambda^" << j << " = ";
    if (r.defined[j])
      os << r.lambda[j];
    else
      os << "undefined";
    os << "\n";
  }
  for (std::size_t j = r.gamma.size(); j-- > 1;)
    if (r.defined[j]) os << "gamma^" << j << " = " << r.gamma[j] << "\n";
  return os.str();
}

std::string frame_text(const Frame& f) {
  std::ostringstream os;
  os << "frame: " << (f.is_identity() ? "identity" : "matrix");
  if (f.seed()) os << " (seed " << *f.seed() << ")";
  os << "\n";
  if (!f.is_identity())
    for (const auto& row : f.matrix()) {
      os << "  [";
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
      os << "]\n";
    }
  return os.str();
}

void render(std::ostream& os, const IneqReport& r, int depth = 0) {
  std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  os << pad << r.name << ": ";
  if (r.status == Status::Skipped && r.lhs == 0 && r.rhs == 0)
    os << "skipped";
  else
    os << r.lhs << " " << to_string(r.relation) << " " << r.rhs << "  [" << to_string(r.status)
       << (r.equality ? ", equality" : "") << "]";
  if (r.advisory) os << " (advisory)";
  if (!r.note.empty()) os << "  -- " << r.note;
  os << "\n";
  if (depth == 0)
    for (const auto& [k, v] : r.context) os << pad << "  " << k << " = " << v << "\n";
  for (const auto& it : r.items) render(os, it, depth + 1);
}

int exit_for(const IneqReport& r) {
  switch (r.status) {
    case Status::Holds: return kOk;
    case Status::Skipped: return kUndefined;
    case Status::Violated:
    case Status::Counterexample: return kFinding;
  }
  return kUndefined;
}

std::vector<PolarComponent> parse_components(const std::vector<std::string>& texts,
                                             const std::vector<std::string>& vars) {
  std::vector<PolarComponent> out;
  for (const auto& text : texts) {
    std::string gens = text;
    unsigned mult = 1;
    if (auto at = text.rfind('@'); at != std::string::npos) {
      gens = text.substr(0, at);
      try {
        mult = static_cast<unsigned>(std::stoul(text.substr(at + 1)));
      } catch (const std::exception&) {
        throw InputError("bad component multiplicity in '" + text + "'");
      }
    }
    std::vector<Polynomial> ps;
    std::stringstream ss(gens);
    std::string piece;
    while (std::getline(ss, piece, ',')) ps.push_back(parse(piece, vars));
    out.push_back({Ideal(vars, std::move(ps)), mult});
  }
  return out;
}

std::vector<Family> load_families(const std::string& path, const std::vector<std::string>& default_vars) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open family file '" + path + "'");
  std::vector<Family> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Json j = Json::parse(line);
      Family fam;
      fam.templ = j.at("template").get<std::string>();
      fam.vars = j.contains("vars") ? split_vars(j["vars"].get<std::string>()) : default_vars;
      if (fam.vars.empty()) throw InputError("no variables given");
      if (j.contains("params"))
        for (const auto& [name, vals] : j["params"].items()) fam.params.emplace_back(name, vals.get<std::vector<long>>());
      out.push_back(std::move(fam));
    } catch (const Json::exception& e) {
      throw InputError("family file line " + std::to_string(lineno) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError("family file line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

struct Output {
  std::ostringstream text;
  std::vector<Json> docs;
};

int cmd_compute(const std::string& what, const Config& cfg, Output& out) {
  auto vars = split_vars(cfg.vars);
  Polynomial f = parse(cfg.poly, vars);
  Json doc = doc_skeleton(cfg.poly, vars);
  auto& os = out.text;
  int code = kOk;

  if (what == "mult") {
    if (f.is_zero()) throw InputError("the zero polynomial has no multiplicity");
    auto hd = homogeneous_degree(f);
    doc["mult"] = mult_origin(f);
    doc["homogeneous_degree"] = hd ? Json(*hd) : Json(nullptr);
    os << "mult = " << mult_origin(f) << "\n";
    os << "homogeneous degree = " << (hd ? std::to_string(*hd) : "none") << "\n";
  } else if (what == "milnor") {
    auto mu = milnor(f);
    doc["milnor"] = mu ? integer_json(*mu) : Json(nullptr);
    os << "mu = " << (mu ? mu->get_str() : "undefined") << "\n";
    if (!mu) code = kUndefined;
  } else if (what == "sectional") {
    SectionalProfile p = sectional_profile(f, cfg.seed, cfg.bound);
    for (const auto& v : p.mu) doc["sectional"].push_back(v ? integer_json(*v) : Json(nullptr));
    if (cfg.k >= 0) {
      if (static_cast<std::size_t>(cfg.k) > f.nvars()) throw InputError("-k must lie in [0, n+1]");
      const auto& v = p.mu[static_cast<std::size_t>(cfg.k)];
      os << "mu(f^[" << cfg.k << "]) = " << (v ? v->get_str() : "undefined") << "\n";
      if (!v) code = kUndefined;
    } else {
      for (std::size_t k = 0; k < p.mu.size(); ++k)
        os << "mu(f^[" << k << "]) = " << (p.mu[k] ? p.mu[k]->get_str() : "undefined") << "\n";
    }
  } else if (what == "le" || what == "polar") {
    LeRecord r = le_for(f, cfg, what == "le");
    doc["frame"] = to_json(r.frame);
    doc["le"] = to_json(r);
    os << "s = " << r.s << "\n" << lambda_line(r);
    os << "mult = " << mult_origin(f) << "\n";
    if (r.verified) os << "restriction cross-check: " << (*r.verified ? "passed" : "FAILED") << "\n";
    if (!r.diagnostic.empty()) os << "diagnostic: " << r.diagnostic << "\n";
    os << frame_text(r.frame);
    if (what == "polar") {
      Json polar = Json::array();
      for (std::size_t j = 1; j <= f.nvars(); ++j) {
        auto g = polar_number(f, r.frame, j);
        Json e;
        e["j"] = j;
        e["gamma"] = g ? integer_json(*g) : Json(nullptr);
        try {
          Integer pm = polar_mult(f, r.frame, j);
          e["mult"] = integer_json(pm);
          os << "Gamma^" << j << ": gamma = " << (g ? g->get_str() : "undefined") << ", mult = " << pm << "\n";
        } catch (const std::domain_error&) {
          e["mult"] = nullptr;
          os << "Gamma^" << j << ": gamma = " << (g ? g->get_str() : "undefined") << ", excess dimension\n";
        }
        polar.push_back(e);
      }
      doc["polar"] = polar;
    }
    if (!r.fully_defined()) code = kUndefined;
  } else {
    throw InputError("unknown quantity '" + what + "'");
  }
  out.docs.push_back(std::move(doc));
  return code;
}

int cmd_check(const std::string& name, const Config& cfg, Output& out) {
  static const std::vector<std::string> known = {"funbound", "leiom",     "mainone", "mainmany", "dagger",
                                                 "suspension", "newmpr", "teissier", "lambda_gamma"};
  if (std::find(known.begin(), known.end(), name) == known.end()) throw InputError("unknown checker '" + name + "'");
  auto vars = split_vars(cfg.vars);
  Polynomial f = parse(cfg.poly, vars);
  Json doc = doc_skeleton(cfg.poly, vars);

  CheckOptions opt;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  opt.bound = cfg.bound;
  if (cfg.frame != "random") opt.frame = load_frame(cfg.frame, f.nvars());

  // Fix the frame once so the document and the checker see the same Lê numbers.
  if (name != "teissier" && f.constant_term() == 0 && critical_dim(f) >= 0) {
    try {
      LeRecord r = opt.frame ? lambda_numbers(f, *opt.frame) : generic_le(f, opt.seed, opt.trials, opt.bound);
      doc["frame"] = to_json(r.frame);
      doc["le"] = to_json(r);
      if (!opt.frame) {
        opt.frame = r.frame;
        opt.generic = true;
      }
    } catch (const std::runtime_error&) {
    }
  }

  IneqReport r;
  if (name == "funbound") r = check_funbound(f, opt);
  else if (name == "leiom") {
    unsigned m = cfg.m ? cfg.m : 2;
    r = cfg.a.empty() ? check_leiom(f, m, opt) : check_leiom(f, m, parse_rational(cfg.a), opt);
  } else if (name == "mainone") r = check_mainone(f, opt);
  else if (name == "mainmany") r = check_mainmany(f, opt);
  else if (name == "dagger") r = check_dagger(f, opt);
  else if (name == "suspension") r = check_suspension(f, opt);
  else if (name == "newmpr") r = check_newmpr(f, opt, parse_components(cfg.components, vars));
  else if (name == "teissier") r = check_teissier(f, opt);
  else r = check_lambda_gamma(f, opt);

  doc["checks"].push_back(to_json(r));
  render(out.text, r);
  out.docs.push_back(std::move(doc));
  return exit_for(r);
}

int cmd_search(const Config& cfg, Output& out) {
  auto families = load_families(cfg.family, cfg.vars.empty() ? std::vector<std::string>{} : split_vars(cfg.vars));
  CheckOptions opt;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  opt.bound = cfg.bound;
  std::vector<SearchEntry> entries;
  try {
    entries = search_dagger(families, opt, cfg.limit);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::size_t found = 0, skipped_count = 0;
  auto& os = out.text;
  os << "margin\tstatus\tlambda\tmu_f[n]\tmu_f[n-1]\tinput\n";
  for (const auto& e : entries) {
    const auto& r = e.report;
    if (r.status == Status::Counterexample || r.status == Status::Violated) ++found;
    if (r.status == Status::Skipped) ++skipped_count;
    auto ctx = [&](const char* k) {
      const std::string* v = r.find_context(k);
      return v ? *v : std::string("-");
    };
    os << ctx("margin") << "\t" << to_string(r.status) << "\t" << ctx("lambda") << "\t" << ctx("mu_f[n]") << "\t"
       << ctx("mu_f[n-1]") << "\t" << e.input << "\n";
    Json doc = doc_skeleton(e.input, e.vars);
    doc["checks"].push_back(to_json(r));
    out.docs.push_back(std::move(doc));
  }
  os << entries.size() << " members, " << found << " counterexamples or violations, " << skipped_count << " skipped\n";
  return found ? kFinding : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lê numbers, polar numbers, sectional Milnor numbers and the inequalities between them"};
  app.set_version_flag("--version", LENUM_VERSION);
  app.require_subcommand(1);
  Config cfg;

  auto* compute = app.add_subcommand("compute", "compute an invariant")->require_subcommand(1);
  for (const char* what : {"le", "milnor", "sectional", "mult", "polar"}) {
    auto* c = compute->add_subcommand(what, std::string("compute ") + what);
    add_common(c, cfg);
    if (std::string(what) == "sectional") c->add_option("-k", cfg.k, "slice dimension; all when omitted");
  }
  auto* check = app.add_subcommand("check", "check an inequality");
  std::string checker;
  check->add_option("checker", checker,
                    "funbound, leiom, mainone, mainmany, dagger, suspension, newmpr, teissier or lambda_gamma")
      ->required();
  add_common(check, cfg);
  check->add_option("-m", cfg.m, "exponent for leiom (default 2)");
  check->add_option("-a", cfg.a, "fixed coefficient for leiom; sampled when omitted");
  check->add_option("--component", cfg.components,
                    "polar curve component for newmpr as comma-separated generators in framed coordinates, "
                    "optionally followed by @multiplicity");
  auto* search = app.add_subcommand("search", "search a family for counterexamples")->require_subcommand(1);
  auto* dagger = search->add_subcommand("dagger", "run the dagger checker over a family");
  add_common(dagger, cfg, false);
  dagger->add_option("--family", cfg.family, "JSON lines: {\"template\": str, \"params\": {name: [ints]}}")->required();
  dagger->add_option("--limit", cfg.limit, "stop after this many members (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  bool seed_given = false;
  for (auto* sc : {compute, check, dagger}) {
    for (auto* leaf : sc->get_subcommands())
      if (leaf->parsed() && leaf->count("--seed")) seed_given = true;
    if (sc->parsed() && sc->get_option_no_throw("--seed") && sc->count("--seed")) seed_given = true;
  }
  if (!seed_given) {
    if (cfg.entropy) {
      std::random_device rd;
      cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    } else if (const char* env = std::getenv("LENUM_SEED")) {
      try {
        cfg.seed = std::stoull(env);
      } catch (const std::exception&) {
        std::cerr << "error: LENUM_SEED is not an unsigned integer\n";
        return kInputError;
      }
    }
  }

  Output out;
  int code;
  try {
    if (compute->parsed()) {
      std::string what;
      for (auto* leaf : compute->get_subcommands())
        if (leaf->parsed()) what = leaf->get_name();
      code = cmd_compute(what, cfg, out);
    } else if (check->parsed()) {
      code = cmd_check(checker, cfg, out);
    } else {
      code = cmd_search(cfg, out);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "undefined: " << e.what() << "\n";
    return kUndefined;
  } catch (const std::runtime_error& e) {
    std::cerr << "undefined: " << e.what() << "\n";
    return kUndefined;
  }

  std::string text;
  if (cfg.json) {
    for (const auto& d : out.docs) text += d.dump(out.docs.size() > 1 ? -1 : 2) + "\n";
  } else {
    text = out.text.str();
    if (cfg.entropy) text = "seed = " + std::to_string(cfg.seed) + "\n" + text;
  }
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "error: cannot write '" << cfg.out << "'\n";
      return kInputError;
    }
    f << text;
  }
  return code;
}
