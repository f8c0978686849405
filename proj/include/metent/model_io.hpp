#pragma once

// JSON and inline-text forms of semi-axis models.
//   {"kind":"canonical","b":1,"c":1}
//   {"kind":"two_term","c1":1,"c2":1,"alpha1":1,"alpha2":1.25}
//   {"kind":"table","values":[3,2,1],"tail":{"b":1,"c":0.5}}
//   canonical:b=1,c=1   two_term:c1=1,c2=1,alpha1=1,alpha2=1.25   table:3,2,1

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "metent/error.hpp"
#include "metent/holder_exponent.hpp"
#include "metent/numeric.hpp"
#include "metent/sequences.hpp"

namespace metent {

using Json = nlohmann::json;

inline Json to_json(const SemiAxisModel& model) {
  if (const auto* c = model.as_canonical()) return {{"kind", "canonical"}, {"b", c->b}, {"c", c->c}};
  if (const auto* t = model.as_two_term()) {
    return {{"kind", "two_term"}, {"c1", t->c1}, {"c2", t->c2}, {"alpha1", t->alpha1}, {"alpha2", t->alpha2}};
  }
  const auto* tab = model.as_table();
  Json j = {{"kind", "table"}, {"values", tab->values}};
  if (tab->tail) j["tail"] = {{"b", tab->tail->b}, {"c", tab->tail->c}};
  return j;
}

inline Json to_json(const HolderExponent& p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

namespace detail {

inline double json_number(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("model is missing field '") + key + "'");
  const Json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return static_cast<double>(parse_rational(v.get<std::string>()));
  throw InvalidInput(std::string("field '") + key + "' must be a number");
}

}  // namespace detail

inline SemiAxisModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw InvalidInput("model must be an object with a string 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "canonical") return SemiAxisModel::canonical(detail::json_number(j, "b"), detail::json_number(j, "c"));
  if (kind == "two_term") {
    return SemiAxisModel::two_term(detail::json_number(j, "c1"), detail::json_number(j, "c2"),
                                   detail::json_number(j, "alpha1"), detail::json_number(j, "alpha2"));
  }
  if (kind == "table") {
    if (!j.contains("values") || !j.at("values").is_array()) throw InvalidInput("table model needs a 'values' array");
    std::vector<double> values;
    for (const Json& v : j.at("values")) {
      if (!v.is_number()) throw InvalidInput("table values must be numbers");
      values.push_back(v.get<double>());
    }
    std::optional<Canonical> tail;
    if (j.contains("tail") && !j.at("tail").is_null()) {
      tail = Canonical{detail::json_number(j.at("tail"), "b"), detail::json_number(j.at("tail"), "c")};
    }
    return SemiAxisModel::table(std::move(values), tail);
  }
  throw InvalidInput("unknown model kind '" + kind + "'");
}

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

inline std::map<std::string, double> key_values(const std::string& text) {
  std::map<std::string, double> out;
  for (const auto& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw InvalidInput("expected key=value, got '" + part + "'");
    out[part.substr(0, eq)] = static_cast<double>(parse_rational(part.substr(eq + 1)));
  }
  return out;
}

inline double take(std::map<std::string, double>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw InvalidInput("model spec is missing '" + key + "'");
  const double v = it->second;
  kv.erase(it);
  return v;
}

}  // namespace detail

/// Parses inline JSON, "@path" (a JSON file) or the short text forms above.
inline SemiAxisModel parse_model_spec(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty model spec");
  if (text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InvalidInput("cannot open model file '" + text.substr(1) + "'");
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& ex) {
      throw InvalidInput(std::string("model file is not valid JSON: ") + ex.what());
    }
    return model_from_json(j);
  }
  if (text.front() == '{') {
    try {
      return model_from_json(Json::parse(text));
    } catch (const Json::exception& ex) {
      throw InvalidInput(std::string("model is not valid JSON: ") + ex.what());
    }
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("model spec must look like kind:params");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "table") {
    std::vector<double> values;
    for (const auto& v : detail::split(rest, ',')) values.push_back(static_cast<double>(parse_rational(v)));
    return SemiAxisModel::table(std::move(values));
  }
  auto kv = detail::key_values(rest);
  SemiAxisModel model = [&] {
    if (kind == "canonical") {
      const double b = detail::take(kv, "b");
      return SemiAxisModel::canonical(b, detail::take(kv, "c"));
    }
    if (kind == "two_term") {
      const double c1 = detail::take(kv, "c1");
      const double c2 = detail::take(kv, "c2");
      const double a1 = detail::take(kv, "alpha1");
      return SemiAxisModel::two_term(c1, c2, a1, detail::take(kv, "alpha2"));
    }
    throw InvalidInput("unknown model kind '" + kind + "'");
  }();
  if (!kv.empty()) throw InvalidInput("unexpected model parameter '" + kv.begin()->first + "'");
  return model;
}

}  // namespace metent
