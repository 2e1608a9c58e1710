#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodd/deriv.hpp"
#include "hodd/function_spec.hpp"
#include "hodd/schedule.hpp"
#include "hodd/subdiff.hpp"

namespace hodd {

struct StationaryOrder {
  int order = 0;              // largest n with 0 ∈ ∂^k for every k ≤ n
  bool inconclusive = false;  // the ladder stopped on an undecided order
  std::vector<TriState> ladder;
};

StationaryOrder stationary_order(const FunctionSpec& f, std::span<const double> x, int max_n,
                                 const LiminfSchedule& sched,
                                 int sphere_samples = kDefaultSphereSamples);

struct CriticalScan {
  std::vector<Point> critical;   // every order ≤ m is zero or negative
  std::vector<Point> undecided;  // some order inconclusive, none positive
};

// Requires stationarity of order m−1 (m > 1); throws DomainError otherwise.
CriticalScan critical_scan(const FunctionSpec& f, std::span<const double> x, int m,
                           const LiminfSchedule& sched, int sphere_samples = kDefaultSphereSamples);
std::vector<Point> critical_directions(const FunctionSpec& f, std::span<const double> x, int m,
                                       const LiminfSchedule& sched,
                                       int sphere_samples = kDefaultSphereSamples);

// Holds iff the point is stationary of order max_n.
TriState check_necessary(const FunctionSpec& f, std::span<const double> x, int max_n,
                         const LiminfSchedule& sched, int sphere_samples = kDefaultSphereSamples);

struct DirectionOrder {
  Point direction;
  std::optional<int> n;  // least order with a positive derivative, if found
  bool operator==(const DirectionOrder&) const = default;
};

struct StrictSufficient {
  TriState result;
  std::vector<DirectionOrder> n_of_u;
  bool operator==(const StrictSufficient&) const = default;
};

// Per direction, ascends from order 1 to the first positive zero-chain
// derivative; a negative one fails, exhausting max_n is inconclusive.
StrictSufficient check_strict_sufficient(const FunctionSpec& f, std::span<const double> x,
                                         int max_n, const LiminfSchedule& sched,
                                         int sphere_samples = kDefaultSphereSamples);

enum class IsolationMode { full_sphere, critical_only };

std::string to_string(IsolationMode m);

// full_sphere: stationary of order n−1 and the order-n derivative positive on
// every sampled direction. critical_only: stationary of order n−1 and the
// order-n derivative positive on the critical directions of order
// critical_order (default n).
TriState check_isolated(const FunctionSpec& f, std::span<const double> x, int n,
                        const LiminfSchedule& sched, int sphere_samples = kDefaultSphereSamples,
                        IsolationMode mode = IsolationMode::full_sphere,
                        std::optional<int> critical_order = std::nullopt);

enum class LeastOrderStatus { found, none, not_candidate, inconclusive };

std::string to_string(LeastOrderStatus s);
LeastOrderStatus least_order_status_from_string(const std::string& s);

struct LeastIsolatedOrder {
  LeastOrderStatus status = LeastOrderStatus::none;
  std::optional<int> order;
  std::vector<DerivEstimate> demyanov;  // element k-1 is order k
};

// Smallest n ≤ max_n with positive Demyanov derivative after zeros at every
// lower order.
LeastIsolatedOrder least_isolated_order(const FunctionSpec& f, std::span<const double> x,
                                        int max_n, const LiminfSchedule& sched);

enum class CellStatus { holds, fails, inconclusive, undefined };

std::string to_string(CellStatus s);
CellStatus cell_status_from_string(const std::string& s);

struct ConditionCell {
  int order = 0;
  CellStatus status = CellStatus::inconclusive;
  std::optional<Point> witness;
  std::string note;
  bool operator==(const ConditionCell&) const = default;
};

// Families "D" (Dini necessary), "N" (zero-chain necessary), "S" (sufficient
// for an isolated minimizer), "G" (Ginchev); orders 1..max_n.
struct ConditionTable {
  int max_n = 0;
  std::map<std::string, std::vector<ConditionCell>> rows;
  bool operator==(const ConditionTable&) const = default;
};

void to_json(nlohmann::json& j, const ConditionTable& t);
void from_json(const nlohmann::json& j, ConditionTable& t);

ConditionTable condition_table(const FunctionSpec& f, std::span<const double> x, int max_n,
                               const LiminfSchedule& sched,
                               int sphere_samples = kDefaultSphereSamples);

struct TableEntry {
  ExtReal value;
  Sign sign = Sign::inconclusive;
  bool operator==(const TableEntry&) const = default;
};

// Full classification record for (f, x).
struct PointReport {
  Point point;
  LiminfSchedule schedule;
  std::uint64_t seed = 0;
  int max_order = 0;
  int sphere_samples = 0;
  // family -> order -> infimum over sampled directions
  std::map<std::string, std::map<int, TableEntry>> tables;
  int stationary_order = 0;
  bool stationary_inconclusive = false;
  std::map<int, std::vector<Point>> critical_dirs;
  TriState necessary;
  StrictSufficient strict_sufficient;
  std::map<int, TriState> isolated;
  LeastOrderStatus least_status = LeastOrderStatus::none;
  std::optional<int> least_order;
  std::map<int, TableEntry> demyanov_values;

  bool operator==(const PointReport&) const = default;
  bool any_inconclusive() const;
};

void to_json(nlohmann::json& j, const PointReport& r);
void from_json(const nlohmann::json& j, PointReport& r);

PointReport analyze_point(const FunctionSpec& f, std::span<const double> x, int max_n,
                          const LiminfSchedule& sched, int sphere_samples = kDefaultSphereSamples);

}  // namespace hodd
