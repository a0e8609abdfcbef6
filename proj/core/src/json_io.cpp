#include "mukai/json_io.hpp"

#include <json.hpp>

namespace mukai {

namespace {

nlohmann::json parse_or_throw(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON: " + text);
  return j;
}

} // namespace

std::string params_to_json(const Params& p) {
  return nlohmann::json{{"a", p.a}, {"b", p.b}, {"c", p.c}}.dump();
}

Params params_from_json(const std::string& text) {
  const auto j = parse_or_throw(text);
  if (!j.contains("a") || !j.contains("b") || !j.contains("c")) {
    throw parse_error("params JSON needs fields a, b, c: " + text);
  }
  return Params(j["a"].get<int64_t>(), j["b"].get<int64_t>(), j["c"].get<int64_t>());
}

std::string divisor_to_json(const DivisorClass& d, const Params& p) {
  check_compatible(d, p, "divisor_to_json");
  return nlohmann::json{{"h", d.h}, {"m", d.m}}.dump();
}

DivisorClass divisor_from_json(const std::string& text, const Params& p) {
  const auto j = parse_or_throw(text);
  if (!j.contains("h") || !j.contains("m")) {
    throw parse_error("divisor JSON needs fields h and m: " + text);
  }
  DivisorClass d(j["h"].get<std::vector<int64_t>>(), j["m"].get<std::vector<int64_t>>());
  if (!d.compatible_with(p)) {
    throw parse_error("divisor JSON has wrong coordinate counts for " + to_string(p));
  }
  return d;
}

} // namespace mukai
