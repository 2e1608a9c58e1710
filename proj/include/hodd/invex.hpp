#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodd/corpus.hpp"
#include "hodd/function_spec.hpp"
#include "hodd/schedule.hpp"
#include "hodd/subdiff.hpp"

namespace hodd {

// Axis-aligned box; lo[i] < hi[i].
struct InvexBox {
  std::vector<double> lo;
  std::vector<double> hi;
  bool operator==(const InvexBox&) const = default;
};

// Parses "lo1,hi1,lo2,hi2,...".
InvexBox parse_box(const std::string& text);

struct InvexCandidate {
  Point point;
  int stationary_order = 0;
  double f = 0.0;
  std::string verdict;  // "minimal", "not_minimal" or "undecided"
  bool operator==(const InvexCandidate&) const = default;
};

// Grid-scale evidence for invexity of a given order.
struct InvexResult {
  TriState result;
  InvexBox box;
  int grid = 0;
  int order = 0;
  ExtReal reference_min;
  std::string reference_source;  // "label" or "grid"
  std::vector<InvexCandidate> candidates;
  int inconclusive = 0;  // grid nodes whose stationarity was undecided
};

void to_json(nlohmann::json& j, const InvexResult& r);

// Grid nodes per axis: lo + (hi − lo)·k/(grid − 1), k = 0..grid−1.
std::vector<Point> grid_points(const InvexBox& box, int grid);

// Every grid node that is stationary of order n must attain the reference
// minimum (label global_min_value when present, else the grid minimum).
InvexResult check_invex_order(const FunctionSpec& f, int n, const InvexBox& box, int grid,
                              const LiminfSchedule& sched,
                              int sphere_samples = kDefaultSphereSamples);
InvexResult check_invex_order(const CorpusEntry& entry, int n, const InvexBox& box, int grid,
                              const LiminfSchedule& sched,
                              int sphere_samples = kDefaultSphereSamples);

}  // namespace hodd
