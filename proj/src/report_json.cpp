#include "lenum/report_json.hpp"

#include <stdexcept>

namespace lenum {

namespace {

Relation relation_from(const std::string& s) {
  if (s == ">=") return Relation::GreaterEq;
  if (s == "<=") return Relation::LessEq;
  if (s == "=") return Relation::Equal;
  throw std::invalid_argument("unknown relation '" + s + "'");
}

Status status_from(const std::string& s) {
  for (Status st : {Status::Holds, Status::Violated, Status::Skipped, Status::Counterexample})
    if (s == to_string(st)) return st;
  throw std::invalid_argument("unknown status '" + s + "'");
}

}  // namespace

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json to_json(const IneqReport& r) {
  Json j;
  j["name"] = r.name;
  j["lhs"] = r.lhs.get_str();
  j["rhs"] = r.rhs.get_str();
  j["relation"] = to_string(r.relation);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["status"] = to_string(r.status);
  if (r.advisory) j["advisory"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  Json ctx = Json::object();
  for (const auto& [k, v] : r.context) ctx[k] = v;
  j["context"] = ctx;
  Json items = Json::array();
  for (const auto& it : r.items) items.push_back(to_json(it));
  j["items"] = items;
  return j;
}

IneqReport report_from_json(const Json& j) {
  IneqReport r;
  r.name = j.at("name").get<std::string>();
  r.lhs = Rational(j.at("lhs").get<std::string>());
  r.lhs.canonicalize();
  r.rhs = Rational(j.at("rhs").get<std::string>());
  r.rhs.canonicalize();
  r.relation = relation_from(j.at("relation").get<std::string>());
  r.holds = j.at("holds").get<bool>();
  r.equality = j.at("equality").get<bool>();
  r.status = status_from(j.at("status").get<std::string>());
  r.advisory = j.value("advisory", false);
  r.note = j.value("note", std::string());
  if (j.contains("context"))
    for (const auto& [k, v] : j.at("context").items()) r.add_context(k, v.get<std::string>());
  if (j.contains("items"))
    for (const auto& it : j.at("items")) r.items.push_back(report_from_json(it));
  return r;
}

Json to_json(const LeRecord& r) {
  Json j;
  j["s"] = r.s;
  Json lam = Json::array(), gam = Json::array(), def = Json::array();
  for (const auto& v : r.lambda) lam.push_back(integer_json(v));
  for (const auto& v : r.gamma) gam.push_back(integer_json(v));
  for (bool b : r.defined) def.push_back(b);
  j["lambda"] = lam;
  j["gamma"] = gam;
  j["defined"] = def;
  if (r.verified) j["verified"] = *r.verified;
  return j;
}

Json to_json(const Frame& f) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : f.matrix()) {
    Json out = Json::array();
    for (const auto& q : row) out.push_back(q.get_str());
    rows.push_back(out);
  }
  j["matrix"] = rows;
  j["seed"] = f.seed() ? Json(*f.seed()) : Json(nullptr);
  return j;
}

}  // namespace lenum
