#include "hodd/corpus.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "hodd/errors.hpp"
#include "hodd/expr.hpp"
#include "hodd/numeric.hpp"

namespace hodd {

namespace {

using ZeroChainOracle = std::function<std::optional<ExtReal>(int n, std::span<const double> u)>;

ExtReal inf_with_sign(double s) {
  if (s > 0) return ExtReal::pos_inf();
  if (s < 0) return ExtReal::neg_inf();
  return 0.0;
}

bool is_origin(std::span<const double> x) {
  for (double c : x)
    if (c != 0.0) return false;
  return true;
}

bool is_zero_vec(std::span<const double> u) { return is_origin(u); }

// Zero-chain values are known in closed form at the labelled origin; Fréchet
// values come from the polynomial data wherever it exists.
ExactOracle make_oracle(ZeroChainOracle at_origin, std::shared_ptr<const PolyTensorData> poly) {
  return [at_origin = std::move(at_origin), poly = std::move(poly)](
             int n, ChainConvention convention, std::span<const double> x,
             std::span<const double> u) -> std::optional<ExtReal> {
    if (n < 1 || is_zero_vec(u)) return std::nullopt;
    if (convention == ChainConvention::frechet) {
      if (!poly || n > poly->max_order()) return std::nullopt;
      return ExtReal(poly->directional(n, x, u));
    }
    if (!at_origin || !is_origin(x)) return std::nullopt;
    return at_origin(n, u);
  };
}

const std::map<std::string, std::vector<std::pair<Point, ExtReal>>>& checkpoint_table() {
  static const std::map<std::string, std::vector<std::pair<Point, ExtReal>>> table = {
      {"ex2", {{{0.0}, 0.0}, {{1.0}, -0.36787944117144233}, {{-1.0}, -0.36787944117144233}, {{0.5}, -0.01831563888873418}, {{-0.5}, -0.01831563888873418}, {{2.0}, -0.7788007830714049}, {{0.25}, -1.1253517471925912e-07}, {{-3.0}, -0.8948393168143698}, {{0.1}, -3.7200759760208774e-44}, {{1.5}, -0.6411803884299546}}},
      {"exp-2d", {{{0.0, 0.0}, 0.0}, {{1.0, 0.0}, 0.36787944117144233}, {{0.0, 1.0}, 0.36787944117144233}, {{1.0, 1.0}, 0.6065306597126334}, {{0.5, -0.5}, 0.1353352832366127}, {{-2.0, 1.0}, 0.8187307530779818}, {{0.1, 0.2}, 2.0611536224385624e-09}, {{3.0, 4.0}, 0.9607894391523232}, {{-0.25, 0.0}, 1.1253517471925912e-07}, {{0.7, -1.3}, 0.6320949894728969}}},
      {"neg-sphere", {{{0.0, 0.0}, 0.0}, {{1.0, 0.0}, -1.0}, {{0.0, 1.0}, -1.0}, {{1.0, 1.0}, -2.0}, {{0.5, -0.5}, -0.5}, {{-2.0, 1.0}, -5.0}, {{0.1, 0.2}, -0.05}, {{3.0, 4.0}, -25.0}, {{-0.25, 0.0}, -0.0625}, {{0.7, -1.3}, -2.18}}},
      {"sq-norm", {{{0.0, 0.0}, 0.0}, {{1.0, 0.0}, 1.0}, {{0.0, 1.0}, 1.0}, {{1.0, 1.0}, 2.0}, {{0.5, -0.5}, 0.5}, {{-2.0, 1.0}, 5.0}, {{0.1, 0.2}, 0.05}, {{3.0, 4.0}, 25.0}, {{-0.25, 0.0}, 0.0625}, {{0.7, -1.3}, 2.18}}},
      {"abs-1d", {{{0.0}, 0.0}, {{1.0}, 1.0}, {{-1.0}, 1.0}, {{0.5}, 0.5}, {{-0.5}, 0.5}, {{2.0}, 2.0}, {{0.25}, 0.25}, {{-3.0}, 3.0}, {{0.1}, 0.1}, {{1.5}, 1.5}}},
      {"quartic-1d", {{{0.0}, 0.0}, {{1.0}, 1.0}, {{-1.0}, 1.0}, {{0.5}, 0.0625}, {{-0.5}, 0.0625}, {{2.0}, 16.0}, {{0.25}, 0.00390625}, {{-3.0}, 81.0}, {{0.1}, 0.00010000000000000002}, {{1.5}, 5.0625}}},
      {"mixed-24", {{{0.0, 0.0}, 0.0}, {{1.0, 0.0}, 1.0}, {{0.0, 1.0}, 1.0}, {{1.0, 1.0}, 2.0}, {{0.5, -0.5}, 0.3125}, {{-2.0, 1.0}, 5.0}, {{0.1, 0.2}, 0.011600000000000001}, {{3.0, 4.0}, 265.0}, {{-0.25, 0.0}, 0.0625}, {{0.7, -1.3}, 3.3461000000000003}}},
      {"linear-c", {{{0.0, 0.0}, 0.0}, {{1.0, 0.0}, 1.0}, {{0.0, 1.0}, -2.0}, {{1.0, 1.0}, -1.0}, {{0.5, -0.5}, 1.5}, {{-2.0, 1.0}, -4.0}, {{0.1, 0.2}, -0.30000000000000004}, {{3.0, 4.0}, -5.0}, {{-0.25, 0.0}, -0.25}, {{0.7, -1.3}, 3.3}}},
      {"indicator-halfline", {{{0.0}, 0.0}, {{1.0}, 0.0}, {{-1.0}, ExtReal::pos_inf()}, {{0.5}, 0.0}, {{-0.5}, ExtReal::pos_inf()}, {{2.0}, 0.0}, {{0.25}, 0.0}, {{-3.0}, ExtReal::pos_inf()}, {{1e-09}, 0.0}, {{-1e-09}, ExtReal::pos_inf()}}},
      {"npc-2", {{{0.0}, 0.0}, {{1.0}, 1.0}, {{-1.0}, -1.0}, {{0.5}, 0.25}, {{-0.5}, -0.25}, {{2.0}, 4.0}, {{-2.0}, -4.0}, {{1.5}, 2.25}, {{-1.5}, -2.25}, {{0.25}, 0.0625}}},
      {"parabola-trap-2", {{{0.0, 0.0}, 0.0}, {{1.0, 1.0}, -1.0}, {{-1.0, 1.0}, -1.0}, {{0.5, 0.25}, -0.0625}, {{-0.5, 0.25}, -0.0625}, {{2.0, 4.0}, -16.0}, {{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}, {{0.5, 0.3}, 0.0}, {{-1.5, 2.25}, -5.0625}}},
      {"npc-3", {{{0.0}, 0.0}, {{1.0}, 1.0}, {{-1.0}, -1.0}, {{0.5}, 0.125}, {{-0.5}, -0.125}, {{2.0}, 8.0}, {{-2.0}, -8.0}, {{1.5}, 3.375}, {{-1.5}, -3.375}, {{0.25}, 0.015625}}},
      {"parabola-trap-3", {{{0.0, 0.0}, 0.0}, {{1.0, 1.0}, -1.0}, {{-1.0, 1.0}, -1.0}, {{0.5, 0.25}, -0.015625}, {{-0.5, 0.25}, -0.015625}, {{2.0, 4.0}, -64.0}, {{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}, {{0.5, 0.3}, 0.0}, {{-1.5, 2.25}, -11.390625}}},
      {"npc-4", {{{0.0}, 0.0}, {{1.0}, 1.0}, {{-1.0}, -1.0}, {{0.5}, 0.0625}, {{-0.5}, -0.0625}, {{2.0}, 16.0}, {{-2.0}, -16.0}, {{1.5}, 5.0625}, {{-1.5}, -5.0625}, {{0.25}, 0.00390625}}},
      {"parabola-trap-4", {{{0.0, 0.0}, 0.0}, {{1.0, 1.0}, -1.0}, {{-1.0, 1.0}, -1.0}, {{0.5, 0.25}, -0.00390625}, {{-0.5, 0.25}, -0.00390625}, {{2.0, 4.0}, -256.0}, {{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}, {{0.5, 0.3}, 0.0}, {{-1.5, 2.25}, -25.62890625}}},
      {"npc-5", {{{0.0}, 0.0}, {{1.0}, 1.0}, {{-1.0}, -1.0}, {{0.5}, 0.03125}, {{-0.5}, -0.03125}, {{2.0}, 32.0}, {{-2.0}, -32.0}, {{1.5}, 7.59375}, {{-1.5}, -7.59375}, {{0.25}, 0.0009765625}}},
      {"parabola-trap-5", {{{0.0, 0.0}, 0.0}, {{1.0, 1.0}, -1.0}, {{-1.0, 1.0}, -1.0}, {{0.5, 0.25}, -0.0009765625}, {{-0.5, 0.25}, -0.0009765625}, {{2.0, 4.0}, -1024.0}, {{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}, {{0.5, 0.3}, 0.0}, {{-1.5, 2.25}, -57.6650390625}}},
      {"npc-6", {{{0.0}, 0.0}, {{1.0}, 1.0}, {{-1.0}, -1.0}, {{0.5}, 0.015625}, {{-0.5}, -0.015625}, {{2.0}, 64.0}, {{-2.0}, -64.0}, {{1.5}, 11.390625}, {{-1.5}, -11.390625}, {{0.25}, 0.000244140625}}},
      {"parabola-trap-6", {{{0.0, 0.0}, 0.0}, {{1.0, 1.0}, -1.0}, {{-1.0, 1.0}, -1.0}, {{0.5, 0.25}, -0.000244140625}, {{-0.5, 0.25}, -0.000244140625}, {{2.0, 4.0}, -4096.0}, {{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}, {{0.5, 0.3}, 0.0}, {{-1.5, 2.25}, -129.746337890625}}},
  };
  return table;
}

struct Builder {
  std::string name;
  int dim;
  std::string provenance;
  std::string source;
  Evaluator evaluator;
  Labels labels;
  std::shared_ptr<const PolyTensorData> poly;
  ZeroChainOracle zero_chain;
  std::vector<SpikeHint> hints;

  CorpusEntry build() {
    FunctionSpec spec(dim, std::move(evaluator));
    spec.source = source;
    spec.poly = poly;
    spec.exact_oracle = make_oracle(std::move(zero_chain), poly);
    const auto& cps = checkpoint_table();
    if (auto it = cps.find(name); it != cps.end()) labels.checkpoints = it->second;
    if (labels.point.empty()) labels.point = Point(static_cast<std::size_t>(dim), 0.0);
    spec.labels = std::move(labels);
    spec.spike_hints = std::move(hints);
    if (!spec.evaluate(spec.labels->point).is_finite())
      throw DomainError("corpus entry '" + name + "' is not finite at its labelled point");
    return CorpusEntry{name, std::move(spec), provenance};
  }
};

std::map<int, bool> invex_all(bool v, int upto) {
  std::map<int, bool> m;
  for (int n = 1; n <= upto; ++n) m[n] = v;
  return m;
}

const std::vector<Point> kProbe1d = {{0.0}, {0.5}, {-0.75}};
const std::vector<Point> kProbe2d = {{0.0, 0.0}, {0.3, -0.25}, {-0.35, 0.2}};

CorpusEntry make_ex2() {
  Builder b;
  b.name = "ex2";
  b.dim = 1;
  b.provenance = "flat global maximizer: -exp(-1/x^2), 0 at the origin";
  b.source = "piecewise(x1^2 == 0, 0, -exp(-1/x1^2))";
  b.evaluator = [](std::span<const double> x) -> ExtReal {
    const double s = ipow(x[0], 2);
    if (s == 0.0) return 0.0;
    return -std::exp(-1.0 / s);
  };
  b.labels.global_maximizer = true;
  b.labels.stationary_all_orders = true;
  b.labels.global_min_value = ExtReal(-1.0);
  b.labels.invex = invex_all(false, 5);
  b.labels.probe_points = {{0.0}, {0.5}, {-0.8}};
  b.zero_chain = [](int, std::span<const double>) -> std::optional<ExtReal> { return 0.0; };
  return b.build();
}

CorpusEntry make_npc(int p) {
  Builder b;
  b.name = "npc-" + std::to_string(p);
  b.dim = 1;
  const bool odd = p % 2 == 1;
  b.provenance = odd ? "x^" + std::to_string(p) + ": stationary of order " + std::to_string(p - 1) +
                           ", invex of order " + std::to_string(p)
                     : "x^" + std::to_string(p) + " for x >= 0, -x^" + std::to_string(p) +
                           " for x < 0: stationary of order " + std::to_string(p - 1) +
                           ", invex of order " + std::to_string(p);
  const std::string pw = std::to_string(p);
  b.source = odd ? "x1^" + pw : "piecewise(x1 >= 0, x1^" + pw + ", -(x1^" + pw + "))";
  b.evaluator = [p, odd](std::span<const double> x) -> ExtReal {
    const double v = ipow(x[0], p);
    if (odd || x[0] >= 0) return v;
    return -v;
  };
  b.labels.stationary_order = p - 1;
  b.labels.global_min_value = ExtReal::neg_inf();
  b.labels.invex = {{p - 1, false}, {p, true}};
  b.labels.probe_points = {{0.0}, {0.6}, {-0.7}};
  if (odd) {
    std::vector<Monomial> monos = {{1.0, {p}}};
    b.poly = std::make_shared<const PolyTensorData>(1, monos);
  }
  b.zero_chain = [p](int k, std::span<const double> u) -> std::optional<ExtReal> {
    const double g = u[0] >= 0 ? ipow(u[0], p) : ((p - 1) % 2 == 0 ? 1.0 : -1.0) * ipow(u[0], p);
    if (k < p) return 0.0;
    if (k == p) return factorial(p) * g;
    return inf_with_sign(g);
  };
  return b.build();
}

CorpusEntry make_exp2d() {
  Builder b;
  b.name = "exp-2d";
  b.dim = 2;
  b.provenance = "exp(-1/(x1^2+x2^2)), 0 at the origin: strict minimizer of no finite isolated order";
  b.source = "piecewise(x1^2 + x2^2 == 0, 0, exp(-1/(x1^2 + x2^2)))";
  b.evaluator = [](std::span<const double> x) -> ExtReal {
    const double s = ipow(x[0], 2) + ipow(x[1], 2);
    if (s == 0.0) return 0.0;
    return std::exp(-1.0 / s);
  };
  b.labels.local_minimizer = b.labels.strict_local_minimizer = b.labels.global_minimizer = true;
  b.labels.stationary_all_orders = true;
  b.labels.global_min_value = ExtReal(0.0);
  b.labels.invex = invex_all(true, 4);
  b.labels.probe_points = {{0.0, 0.0}, {0.4, -0.3}, {-0.6, 0.5}};
  b.zero_chain = [](int, std::span<const double>) -> std::optional<ExtReal> { return 0.0; };
  return b.build();
}

// Points (a, a²) on the parabola near x + t·u, within the implied direction ball.
SpikeHint parabola_hint() {
  SpikeHint h;
  h.description = "points (a, a^2) on the parabola x2 = x1^2 near x + t*u";
  h.candidates = [](std::span<const double> x, double t, std::span<const double> u,
                    double rho) {
    const double c1 = x[0] + t * u[0];
    const double c2 = x[1] + t * u[1];
    const double r = t * rho;
    std::vector<double> as;
    static constexpr double kOffsets[] = {-1.0, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0};
    for (double s : kOffsets) as.push_back(c1 + s * r);
    for (double s : kOffsets) {
      const double y2 = c2 + s * r;
      if (y2 >= 0) {
        as.push_back(std::sqrt(y2));
        as.push_back(-std::sqrt(y2));
      }
    }
    std::vector<Point> pts;
    pts.reserve(as.size());
    for (double a : as) pts.push_back({a, a * a});
    return pts;
  };
  return h;
}

CorpusEntry make_parabola_trap(int p) {
  Builder b;
  const std::string pw = std::to_string(p);
  b.name = "parabola-trap-" + pw;
  b.dim = 2;
  b.provenance = "-x2^" + pw + " on the parabola x2 = x1^2, 0 elsewhere: Dini derivatives vanish";
  b.source = "piecewise(x2 == x1^2, -(x2^" + pw + "), 0)";
  b.evaluator = [p](std::span<const double> x) -> ExtReal {
    if (x[1] == ipow(x[0], 2)) return -ipow(x[1], p);
    return 0.0;
  };
  // Directions u' -> u with u2 != 0 never reach the parabola as t -> 0; along
  // u2 = 0 the parabola is reached with u2' = t·u1'², giving a first nonzero
  // value at order 2p.
  b.labels.stationary_order = 2 * p - 1;
  b.labels.global_min_value = ExtReal::neg_inf();
  b.labels.probe_points = {{0.0, 0.0}, {0.5, 0.25}, {0.3, -0.2}};
  b.zero_chain = [p](int k, std::span<const double> u) -> std::optional<ExtReal> {
    if (k < 2 * p || u[1] != 0.0) return 0.0;
    if (k == 2 * p) return -factorial(2 * p) * ipow(u[0], 2 * p);
    return ExtReal::neg_inf();
  };
  b.hints.push_back(parabola_hint());
  return b.build();
}

CorpusEntry make_neg_sphere() {
  Builder b;
  b.name = "neg-sphere";
  b.dim = 2;
  b.provenance = "-x1^2 - x2^2: second-order invex but not invex";
  b.source = "-x1^2 - x2^2";
  b.evaluator = [](std::span<const double> x) -> ExtReal {
    return -ipow(x[0], 2) - ipow(x[1], 2);
  };
  b.labels.global_maximizer = true;
  b.labels.stationary_order = 1;
  b.labels.global_min_value = ExtReal::neg_inf();
  b.labels.invex = {{1, false}, {2, true}, {3, true}};
  b.labels.probe_points = kProbe2d;
  b.poly = std::make_shared<const PolyTensorData>(
      2, std::vector<Monomial>{{-1.0, {2, 0}}, {-1.0, {0, 2}}});
  b.zero_chain = [](int k, std::span<const double> u) -> std::optional<ExtReal> {
    if (k == 1) return 0.0;
    if (k == 2) return -2.0 * (ipow(u[0], 2) + ipow(u[1], 2));
    return ExtReal::neg_inf();
  };
  return b.build();
}

CorpusEntry make_sq_norm() {
  Builder b;
  b.name = "sq-norm";
  b.dim = 2;
  b.provenance = "x1^2 + x2^2: isolated minimizer of order 2";
  b.source = "x1^2 + x2^2";
  b.evaluator = [](std::span<const double> x) -> ExtReal { return ipow(x[0], 2) + ipow(x[1], 2); };
  b.labels.local_minimizer = b.labels.strict_local_minimizer = b.labels.global_minimizer = true;
  b.labels.stationary_all_orders = true;
  b.labels.least_isolated_order = 2;
  b.labels.global_min_value = ExtReal(0.0);
  b.labels.invex = invex_all(true, 4);
  b.labels.probe_points = kProbe2d;
  b.poly = std::make_shared<const PolyTensorData>(
      2, std::vector<Monomial>{{1.0, {2, 0}}, {1.0, {0, 2}}});
  b.zero_chain = [](int k, std::span<const double> u) -> std::optional<ExtReal> {
    if (k == 1) return 0.0;
    if (k == 2) return 2.0 * (ipow(u[0], 2) + ipow(u[1], 2));
    return ExtReal::pos_inf();
  };
  return b.build();
}

CorpusEntry make_abs() {
  Builder b;
  b.name = "abs-1d";
  b.dim = 1;
  b.provenance = "|x|: isolated minimizer of order 1";
  b.source = "abs(x1)";
  b.evaluator = [](std::span<const double> x) -> ExtReal { return std::abs(x[0]); };
  b.labels.local_minimizer = b.labels.strict_local_minimizer = b.labels.global_minimizer = true;
  b.labels.stationary_all_orders = true;
  b.labels.least_isolated_order = 1;
  b.labels.global_min_value = ExtReal(0.0);
  b.labels.invex = invex_all(true, 4);
  b.labels.probe_points = kProbe1d;
  b.zero_chain = [](int k, std::span<const double> u) -> std::optional<ExtReal> {
    if (k == 1) return std::abs(u[0]);
    return ExtReal::pos_inf();
  };
  return b.build();
}

CorpusEntry make_quartic() {
  Builder b;
  b.name = "quartic-1d";
  b.dim = 1;
  b.provenance = "x^4: isolated minimizer of order 4";
  b.source = "x1^4";
  b.evaluator = [](std::span<const double> x) -> ExtReal { return ipow(x[0], 4); };
  b.labels.local_minimizer = b.labels.strict_local_minimizer = b.labels.global_minimizer = true;
  b.labels.stationary_all_orders = true;
  b.labels.least_isolated_order = 4;
  b.labels.global_min_value = ExtReal(0.0);
  b.labels.invex = invex_all(true, 4);
  b.labels.probe_points = kProbe1d;
  b.poly = std::make_shared<const PolyTensorData>(1, std::vector<Monomial>{{1.0, {4}}});
  b.zero_chain = [](int k, std::span<const double> u) -> std::optional<ExtReal> {
    if (k < 4) return 0.0;
    if (k == 4) return 24.0 * ipow(u[0], 4);
    return ExtReal::pos_inf();
  };
  return b.build();
}

CorpusEntry make_mixed24() {
  Builder b;
  b.name = "mixed-24";
  b.dim = 2;
  b.provenance = "x1^2 + x2^4: quadratic growth off the x2-axis, quartic along it";
  b.source = "x1^2 + x2^4";
  b.evaluator = [](std::span<const double> x) -> ExtReal { return ipow(x[0], 2) + ipow(x[1], 4); };
  b.labels.local_minimizer = b.labels.strict_local_minimizer = b.labels.global_minimizer = true;
  b.labels.stationary_all_orders = true;
  b.labels.least_isolated_order = 4;
  b.labels.global_min_value = ExtReal(0.0);
  b.labels.invex = invex_all(true, 4);
  b.labels.probe_points = kProbe2d;
  b.poly = std::make_shared<const PolyTensorData>(
      2, std::vector<Monomial>{{1.0, {2, 0}}, {1.0, {0, 4}}});
  b.zero_chain = [](int k, std::span<const double> u) -> std::optional<ExtReal> {
    const bool off_axis = u[0] != 0.0;
    if (k == 1) return 0.0;
    if (k == 2) return 2.0 * ipow(u[0], 2);
    if (off_axis) return ExtReal::pos_inf();
    if (k == 3) return 0.0;
    if (k == 4) return 24.0 * ipow(u[1], 4);
    return ExtReal::pos_inf();
  };
  return b.build();
}

CorpusEntry make_linear() {
  Builder b;
  b.name = "linear-c";
  b.dim = 2;
  b.provenance = "c.x with c = (1, -2): no stationary points";
  b.source = "x1 - 2*x2";
  b.evaluator = [](std::span<const double> x) -> ExtReal { return x[0] - 2.0 * x[1]; };
  b.labels.stationary_order = 0;
  b.labels.global_min_value = ExtReal::neg_inf();
  b.labels.invex = invex_all(true, 3);
  b.labels.probe_points = kProbe2d;
  b.poly = std::make_shared<const PolyTensorData>(
      2, std::vector<Monomial>{{1.0, {1, 0}}, {-2.0, {0, 1}}});
  b.zero_chain = [](int k, std::span<const double> u) -> std::optional<ExtReal> {
    const double s = u[0] - 2.0 * u[1];
    if (k == 1) return s;
    // On c.u = 0 the joint liminf still reaches -inf through u' with c.u' < 0.
    return s > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
  };
  return b.build();
}

CorpusEntry make_indicator() {
  Builder b;
  b.name = "indicator-halfline";
  b.dim = 1;
  b.provenance = "indicator of [0, +inf): 0 on the half-line, +inf elsewhere";
  b.source = "piecewise(x1 >= 0, 0, inf)";
  b.evaluator = [](std::span<const double> x) -> ExtReal {
    if (x[0] >= 0) return 0.0;
    return ExtReal::pos_inf();
  };
  b.labels.local_minimizer = b.labels.global_minimizer = true;
  b.labels.stationary_all_orders = true;
  b.labels.global_min_value = ExtReal(0.0);
  b.labels.invex = invex_all(true, 4);
  b.labels.probe_points = {{0.0}, {0.5}, {1.0}};
  b.zero_chain = [](int, std::span<const double> u) -> std::optional<ExtReal> {
    if (u[0] > 0) return 0.0;
    return ExtReal::pos_inf();
  };
  return b.build();
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back(make_ex2());
  for (int p = 2; p <= 6; ++p) c.push_back(make_npc(p));
  c.push_back(make_exp2d());
  for (int p = 2; p <= 6; ++p) c.push_back(make_parabola_trap(p));
  c.push_back(make_neg_sphere());
  c.push_back(make_sq_norm());
  c.push_back(make_abs());
  c.push_back(make_quartic());
  c.push_back(make_mixed24());
  c.push_back(make_linear());
  c.push_back(make_indicator());
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_lookup(std::string_view name) {
  for (const CorpusEntry& e : corpus())
    if (e.name == name) return e;
  std::string names;
  for (const CorpusEntry& e : corpus()) {
    if (!names.empty()) names += ", ";
    names += e.name;
  }
  throw DomainError("unknown corpus entry '" + std::string(name) + "'; available: " + names);
}

std::string corpus_listing() {
  std::string out;
  for (const CorpusEntry& e : corpus())
    out += e.name + "\t" + std::to_string(e.spec.dim()) + "\t" + e.provenance + "\n";
  return out;
}

}  // namespace hodd
