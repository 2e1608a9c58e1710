#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodd/deriv.hpp"
#include "hodd/extreal.hpp"
#include "hodd/function_spec.hpp"
#include "hodd/schedule.hpp"
#include "hodd/sym_tensor.hpp"

namespace hodd {

enum class Verdict { holds, fails, inconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct TriState {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Point> witness;  // present when verdict = fails
  ExtReal margin = 0.0;          // min over directions of (estimate − candidate)
  std::optional<int> order;      // order at which a failure was found
  int directions = 0;            // sampled directions examined
  std::string note;

  bool operator==(const TriState&) const = default;
};

void to_json(nlohmann::json& j, const TriState& t);
void from_json(const nlohmann::json& j, TriState& t);

// Default number of sampled unit directions for d >= 2.
constexpr int kDefaultSphereSamples = 64;

// 0 ∈ ∂ⁿf(x; 0,…,0): the zero-chain order-n derivative is >= 0 on every
// sampled unit direction. Lower orders are checked first; a failing lower
// order throws DomainError, an inconclusive one gives inconclusive.
TriState zero_in_subdiff(const FunctionSpec& f, std::span<const double> x, int n,
                         const LiminfSchedule& sched, int sphere_samples = kDefaultSphereSamples);

// Verdicts of zero_in_subdiff for orders 1, 2, … up to max_n, stopping after
// the first order that does not hold.
std::vector<TriState> zero_in_subdiff_ladder(const FunctionSpec& f, std::span<const double> x,
                                             int max_n, const LiminfSchedule& sched,
                                             int sphere_samples = kDefaultSphereSamples);

// cand(u)…(u) ≤ derivative(chain; u) on every sampled unit direction.
TriState tensor_in_subdiff(const FunctionSpec& f, std::span<const double> x,
                           const MultiplierChain& chain, const SymTensor& cand,
                           const LiminfSchedule& sched, int sphere_samples = kDefaultSphereSamples);

struct Interval {
  ExtReal lo;
  ExtReal hi;
  bool empty = false;

  bool contains(double a) const { return !empty && lo <= ExtReal(a) && ExtReal(a) <= hi; }
  bool operator==(const Interval&) const = default;
};

void to_json(nlohmann::json& j, const Interval& i);

// Exact order-n subdifferential on R (zero chain): from the derivatives in
// the directions +1 and −1.
Interval subdiff_interval_1d(const FunctionSpec& f, std::span<const double> x, int n,
                             const LiminfSchedule& sched);

}  // namespace hodd
