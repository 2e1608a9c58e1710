#include "hodd/invex.hpp"

#include <cmath>
#include <sstream>

#include "hodd/classify.hpp"
#include "hodd/errors.hpp"
#include "hodd/parallel.hpp"

namespace hodd {

namespace {

constexpr double kMinTol = 1e-6;

struct NodeResult {
  ExtReal value;
  int order = 0;
  bool inconclusive = false;
};

}  // namespace

InvexBox parse_box(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("bad box component '" + item + "'");
    }
  }
  if (vals.empty() || vals.size() % 2 != 0)
    throw DomainError("box needs lo,hi pairs, got " + std::to_string(vals.size()) + " values");
  InvexBox box;
  for (std::size_t i = 0; i < vals.size(); i += 2) {
    box.lo.push_back(vals[i]);
    box.hi.push_back(vals[i + 1]);
  }
  return box;
}

std::vector<Point> grid_points(const InvexBox& box, int grid) {
  if (grid < 2) throw DomainError("grid needs at least 2 points per axis");
  if (box.lo.empty() || box.lo.size() != box.hi.size()) throw DomainError("empty box");
  for (std::size_t i = 0; i < box.lo.size(); ++i)
    if (!(box.lo[i] < box.hi[i]) || !std::isfinite(box.lo[i]) || !std::isfinite(box.hi[i]))
      throw DomainError("degenerate box on axis " + std::to_string(i + 1));
  const std::size_t d = box.lo.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::size_t>(grid);
  std::vector<Point> pts;
  pts.reserve(total);
  std::vector<int> idx(d, 0);
  for (std::size_t n = 0; n < total; ++n) {
    Point p(d);
    for (std::size_t i = 0; i < d; ++i)
      p[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * idx[i] / (grid - 1);
    pts.push_back(std::move(p));
    for (std::size_t i = d; i-- > 0;) {
      if (++idx[i] < grid) break;
      idx[i] = 0;
    }
  }
  return pts;
}

void to_json(nlohmann::json& j, const InvexResult& r) {
  nlohmann::json box = nlohmann::json::array();
  for (std::size_t i = 0; i < r.box.lo.size(); ++i) box.push_back({r.box.lo[i], r.box.hi[i]});
  nlohmann::json cands = nlohmann::json::array();
  for (const InvexCandidate& c : r.candidates)
    cands.push_back({{"point", c.point},
                     {"stationary_order", c.stationary_order},
                     {"f", c.f},
                     {"verdict", c.verdict}});
  j = nlohmann::json{{"grid_scale", true},
                     {"order", r.order},
                     {"box", box},
                     {"grid", r.grid},
                     {"verdict", r.result},
                     {"reference_min", r.reference_min},
                     {"reference_source", r.reference_source},
                     {"candidates", cands},
                     {"inconclusive", r.inconclusive}};
}

InvexResult check_invex_order(const FunctionSpec& f, int n, const InvexBox& box, int grid,
                              const LiminfSchedule& sched, int sphere_samples) {
  if (n < 1) throw DomainError("order must be >= 1");
  if (static_cast<int>(box.lo.size()) != f.dim())
    throw DomainError("box has " + std::to_string(box.lo.size()) + " axes, function has " +
                      std::to_string(f.dim()));
  sched.validate();
  const std::vector<Point> pts = grid_points(box, grid);

  const auto nodes = parallel_map(pts.size(), [&](std::size_t i) {
    NodeResult r;
    r.value = f.evaluate(pts[i]);
    if (!r.value.is_finite()) return r;
    const StationaryOrder s = stationary_order(f, pts[i], n, sched, sphere_samples);
    r.order = s.order;
    r.inconclusive = s.inconclusive;
    return r;
  });

  InvexResult out;
  out.box = box;
  out.grid = grid;
  out.order = n;
  ExtReal grid_min = ExtReal::pos_inf();
  for (const NodeResult& r : nodes)
    if (r.value < grid_min) grid_min = r.value;
  if (f.labels && f.labels->global_min_value) {
    out.reference_min = *f.labels->global_min_value;
    out.reference_source = "label";
  } else {
    out.reference_min = grid_min;
    out.reference_source = "grid";
  }
  const double tol = out.reference_min.is_finite()
                         ? kMinTol * (1.0 + std::abs(out.reference_min.value()))
                         : 0.0;

  std::optional<std::size_t> witness;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const NodeResult& r = nodes[i];
    if (!r.value.is_finite()) continue;
    if (r.order < n) {
      if (r.inconclusive) {
        ++out.inconclusive;
        out.candidates.push_back({pts[i], r.order, r.value.value(), "undecided"});
      }
      continue;
    }
    const bool minimal = out.reference_min.is_finite()
                             ? r.value.value() <= out.reference_min.value() + tol
                             : false;
    out.candidates.push_back(
        {pts[i], r.order, r.value.value(), minimal ? "minimal" : "not_minimal"});
    if (!minimal && !witness) witness = i;
  }

  out.result.directions = sphere_samples;
  out.result.order = n;
  if (witness) {
    out.result.verdict = Verdict::fails;
    out.result.witness = pts[*witness];
    out.result.margin = nodes[*witness].value - out.reference_min;
    out.result.note = "stationary point of order " + std::to_string(n) + " is not a global minimizer";
  } else if (out.inconclusive > 0) {
    out.result.verdict = Verdict::inconclusive;
    out.result.note = std::to_string(out.inconclusive) + " grid nodes with undecided stationarity";
  } else {
    out.result.verdict = Verdict::holds;
    out.result.note = "every stationary grid node of order " + std::to_string(n) + " is minimal";
  }
  return out;
}

InvexResult check_invex_order(const CorpusEntry& entry, int n, const InvexBox& box, int grid,
                              const LiminfSchedule& sched, int sphere_samples) {
  return check_invex_order(entry.spec, n, box, grid, sched, sphere_samples);
}

}  // namespace hodd
