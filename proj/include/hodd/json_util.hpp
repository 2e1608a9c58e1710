#pragma once

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include <json.hpp>

namespace hodd {

// Rounds a double to 12 significant digits.
inline double round12(double v) {
  if (v == 0.0) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

// Rounds every floating-point number in a JSON document to 12 significant digits.
inline void round_numbers(nlohmann::json& j) {
  if (j.is_number_float()) {
    j = round12(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child);
  }
}

template <class V>
nlohmann::json int_keyed(const std::map<int, V>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

template <class V>
std::map<int, V> from_int_keyed(const nlohmann::json& j) {
  std::map<int, V> m;
  for (const auto& [k, v] : j.items()) m[std::stoi(k)] = v.template get<V>();
  return m;
}

}  // namespace hodd
