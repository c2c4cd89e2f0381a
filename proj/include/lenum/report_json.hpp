#pragma once

#include <json.hpp>

#include "lenum/inequalities.hpp"

namespace lenum {

using Json = nlohmann::ordered_json;

/// JSON number when it fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer& z);
/// Rationals and integers are written as "p/q" or "p" strings.
Json to_json(const IneqReport& r);
Json to_json(const LeRecord& r);
Json to_json(const Frame& f);
/// Inverse of to_json(IneqReport), for reports persisted by search runs.
IneqReport report_from_json(const Json& j);

}  // namespace lenum
