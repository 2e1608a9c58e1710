#include "hodd/schedule.hpp"

#include <cmath>
#include <limits>

#include "hodd/errors.hpp"

namespace hodd {

std::string to_string(FloorPolicy p) {
  return p == FloorPolicy::fixed ? "fixed" : "noise_adaptive";
}

FloorPolicy floor_policy_from_string(const std::string& s) {
  if (s == "noise_adaptive") return FloorPolicy::noise_adaptive;
  if (s == "fixed") return FloorPolicy::fixed;
  throw DomainError("unknown order_floor_policy '" + s + "' (expected noise_adaptive or fixed)");
}

void LiminfSchedule::validate() const {
  if (!(t0 > 0) || !std::isfinite(t0)) throw DomainError("schedule invalid: t0 must be > 0");
  if (!(ratio > 0 && ratio < 1)) throw DomainError("schedule invalid: ratio must lie in (0,1)");
  if (shells < 1) throw DomainError("schedule invalid: shells must be >= 1");
  if (!(dir_radius0 >= 0) || !std::isfinite(dir_radius0))
    throw DomainError("schedule invalid: dir_radius0 must be >= 0");
  if (dir_samples < 0) throw DomainError("schedule invalid: dir_samples must be >= 0");
  if (tail < 1 || tail > shells) throw DomainError("schedule invalid: tail must lie in [1, shells]");
}

double LiminfSchedule::raw_step(int j) const { return t0 * std::pow(ratio, j); }

double LiminfSchedule::radius(int j) const { return dir_radius0 * std::pow(ratio, j); }

double fixed_floor(int n) {
  return 10.0 * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (n + 1));
}

void to_json(nlohmann::json& j, const LiminfSchedule& s) {
  j = nlohmann::json{{"t0", s.t0},
                     {"ratio", s.ratio},
                     {"shells", s.shells},
                     {"dir_radius0", s.dir_radius0},
                     {"dir_samples", s.dir_samples},
                     {"tail", s.tail},
                     {"seed", s.seed},
                     {"order_floor_policy", to_string(s.order_floor_policy)}};
}

void from_json(const nlohmann::json& j, LiminfSchedule& s) {
  if (!j.is_object()) throw DomainError("schedule JSON must be an object");
  static const char* kKnown[] = {"t0",   "ratio", "shells", "dir_radius0", "dir_samples",
                                 "tail", "seed",  "order_floor_policy"};
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw DomainError("unknown schedule field '" + key + "'");
  }
  LiminfSchedule out;
  try {
    if (j.contains("t0")) out.t0 = j.at("t0").get<double>();
    if (j.contains("ratio")) out.ratio = j.at("ratio").get<double>();
    if (j.contains("shells")) out.shells = j.at("shells").get<int>();
    if (j.contains("dir_radius0")) out.dir_radius0 = j.at("dir_radius0").get<double>();
    if (j.contains("dir_samples")) out.dir_samples = j.at("dir_samples").get<int>();
    if (j.contains("tail")) out.tail = j.at("tail").get<int>();
    if (j.contains("seed")) out.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("order_floor_policy"))
      out.order_floor_policy = floor_policy_from_string(j.at("order_floor_policy").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("schedule JSON has a field of the wrong type: ") + e.what());
  }
  out.validate();
  s = out;
}

}  // namespace hodd
