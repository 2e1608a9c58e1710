#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodd/extreal.hpp"
#include "hodd/function_spec.hpp"
#include "hodd/schedule.hpp"
#include "hodd/sym_tensor.hpp"

namespace hodd {

enum class Sign { positive, zero, negative, inconclusive };

std::string to_string(Sign s);
Sign sign_from_string(const std::string& s);

struct DerivEstimate {
  ExtReal value;
  std::vector<ExtReal> shell_minima;  // one per shell, in shell order
  bool converged = false;
  Sign sign = Sign::inconclusive;
  double eps_used = 0.0;
  double t_floor = 0.0;  // smallest step used
  long samples = 0;      // number of quotients evaluated
};

void to_json(nlohmann::json& j, const DerivEstimate& e);
void from_json(const nlohmann::json& j, DerivEstimate& e);

// Aggregates per-shell minima over the last `tail` shells into value,
// convergence flag and sign.
DerivEstimate aggregate_shells(std::vector<ExtReal> shell_minima, int tail);

// Sign of a value under the estimator's tolerance rule.
Sign decide_sign(const ExtReal& value, bool converged, double eps);

// n!·t^{-n}·[f(x+t·u′) − f(x) − Σ_{i<n} t^i/i!·x_i*(u′)^i], n = chain.order().
ExtReal delta_n(const FunctionSpec& f, std::span<const double> x, const MultiplierChain& chain,
                double t, std::span<const double> u_prime);

// Smallest step used for an order-n quotient at (x, u) under the schedule's
// floor policy. The noise-adaptive rule probes along the centre direction u.
double step_floor(const FunctionSpec& f, std::span<const double> x,
                  const MultiplierChain& chain, std::span<const double> u,
                  const LiminfSchedule& sched);

// liminf_{t↓0, u′→u} Δ_n.
DerivEstimate hadamard_deriv(const FunctionSpec& f, std::span<const double> x,
                             const MultiplierChain& chain, std::span<const double> u,
                             const LiminfSchedule& sched);

// liminf_{t↓0, u′→u} t^{-n}[f(x+t·u′) − f(x)] on the zero-chain samples.
DerivEstimate studniarski_deriv(const FunctionSpec& f, std::span<const double> x, int n,
                                std::span<const double> u, const LiminfSchedule& sched);

// liminf_{y→x} (f(y) − f(x))/‖y − x‖^n over shrinking spheres of
// sched.directions_for(d) points.
DerivEstimate demyanov_deriv(const FunctionSpec& f, std::span<const double> x, int n,
                             const LiminfSchedule& sched);

// Fixed-direction derivatives of orders 1..n; element k-1 is order k.
// Throws UndefinedError when a lower order is infinite, or with partial = true
// returns the defined prefix instead.
std::vector<DerivEstimate> dini_ladder(const FunctionSpec& f, std::span<const double> x, int n,
                                       std::span<const double> u, const LiminfSchedule& sched,
                                       bool partial = false);
DerivEstimate dini_deriv(const FunctionSpec& f, std::span<const double> x, int n,
                         std::span<const double> u, const LiminfSchedule& sched);

// Hadamard-type derivatives starting at order 0; element k is order k. The
// order-0 sign compares the value against f(x). `partial` as for dini_ladder.
std::vector<DerivEstimate> ginchev_ladder(const FunctionSpec& f, std::span<const double> x, int n,
                                          std::span<const double> u, const LiminfSchedule& sched,
                                          bool partial = false);
DerivEstimate ginchev_deriv(const FunctionSpec& f, std::span<const double> x, int n,
                            std::span<const double> u, const LiminfSchedule& sched);

// Reference liminf on a dense grid derived from the base schedule: 10× shells
// (t_k = t0·ratio^{k/10}), 20× directions, 10× tail and the base step floor.
// Every sample of hadamard_deriv(base) is also a sample here.
ExtReal brute_liminf(const FunctionSpec& f, std::span<const double> x,
                     const MultiplierChain& chain, std::span<const double> u,
                     const LiminfSchedule& base);

}  // namespace hodd
