#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace hodd {

// How the smallest admissible step t is chosen for an order-n quotient.
//   noise_adaptive: walk the step grid at the centre direction and stop at the
//                   first step whose rounding bound exceeds 1e-6·(1 + |Δ|).
//   fixed:          t_min(n) = 10·ε^{1/(n+1)}.
enum class FloorPolicy { noise_adaptive, fixed };

std::string to_string(FloorPolicy p);
FloorPolicy floor_policy_from_string(const std::string& s);

// Discretization of liminf_{t↓0, u′→u}: shell j uses the step
// t_j = max(t0·ratio^j, floor) and the direction ball radius ρ_j = ρ0·ratio^j.
struct LiminfSchedule {
  double t0 = 0.25;
  double ratio = 0.7;
  int shells = 60;
  double dir_radius0 = 0.25;
  int dir_samples = 0;  // 0 selects 32·d
  int tail = 5;
  std::uint64_t seed = 0;
  FloorPolicy order_floor_policy = FloorPolicy::noise_adaptive;

  // Throws DomainError naming the offending field.
  void validate() const;

  int directions_for(int dim) const { return dir_samples > 0 ? dir_samples : 32 * dim; }
  double raw_step(int j) const;
  double radius(int j) const;

  bool operator==(const LiminfSchedule&) const = default;
};

// 10·ε^{1/(n+1)}.
double fixed_floor(int n);

void to_json(nlohmann::json& j, const LiminfSchedule& s);
void from_json(const nlohmann::json& j, LiminfSchedule& s);

}  // namespace hodd
