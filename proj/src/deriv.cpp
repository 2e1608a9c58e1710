#include "hodd/deriv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hodd/errors.hpp"
#include "hodd/numeric.hpp"
#include "hodd/parallel.hpp"
#include "hodd/sampling.hpp"

namespace hodd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSignTol = 1e-5;
constexpr double kSpreadTol = 1e-4;
constexpr double kNoiseTol = 1e-6;

double base_value(const FunctionSpec& f, std::span<const double> x) {
  const ExtReal fx = f.evaluate(x);
  if (!fx.is_finite()) throw DomainError("base point outside domain");
  return fx.value();
}

void check_direction(const FunctionSpec& f, std::span<const double> u) {
  if (static_cast<int>(u.size()) != f.dim())
    throw DomainError("direction has dimension " + std::to_string(u.size()) + ", expected " +
                      std::to_string(f.dim()));
  for (double c : u)
    if (!std::isfinite(c)) throw DomainError("direction has a non-finite component");
}

void check_order(int n) {
  if (n < 1) throw DomainError("derivative order must be >= 1");
}

Point step_point(std::span<const double> x, double t, std::span<const double> u) {
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + t * u[i];
  return y;
}

// Direction actually realized by the rounded point y = fl(x + t·u).
Point realized(std::span<const double> x, double t, std::span<const double> y) {
  Point up(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) up[i] = (y[i] - x[i]) / t;
  return up;
}

// Σ_{i<n} t^i/i!·x_i*(u′)^i together with Σ of the absolute terms.
std::pair<double, double> chain_sum(const MultiplierChain& chain, double t,
                                    std::span<const double> u) {
  double s = 0.0;
  double a = 0.0;
  for (const SymTensor& T : chain.tensors()) {
    if (T.is_zero()) continue;
    const int i = T.order();
    const double term = ipow(t, i) / factorial(i) * T.apply(u);
    s += term;
    a += std::abs(term);
  }
  return {s, a};
}

// n!·((fy − base)/t^n), +inf when fy is +inf.
ExtReal scaled_quotient(const ExtReal& fy, double base, double t, int n, double scale) {
  if (fy.is_pos_inf()) return ExtReal::pos_inf();
  const double q = (fy.value() - base) / ipow(t, n);
  return ExtReal(scale * q);
}

bool admissible(double fx, const ExtReal& fy, double t, int n, double terms_abs,
                double base_minus_terms) {
  if (!fy.is_finite()) return true;
  const double v = fy.value();
  const double nf = factorial(n);
  const double tn = ipow(t, n);
  const double delta = nf * ((v - base_minus_terms) / tn);
  const double noise =
      2.0 * kEps * nf * (std::abs(fx) + std::abs(v) + terms_abs) / tn;
  return std::isfinite(delta) && noise <= kNoiseTol * (1.0 + std::abs(delta));
}

using Kernel = std::function<ExtReal(const ExtReal& fy, double t, std::span<const double> u_prime)>;

struct ShellPlan {
  int shells = 0;
  std::function<double(int)> step;
  std::function<double(int)> radius;
  const std::vector<Point>* offsets = nullptr;
  bool hints = false;
};

struct ShellResult {
  ExtReal min;
  long samples = 0;
};

// Minimum of the kernel over each shell's samples: the centre u, the ball
// offsets scaled by ρ_j, and spike-hint points whose implied direction lies in
// the ball.
std::vector<ShellResult> scan_shells(const FunctionSpec& f, std::span<const double> x,
                                     std::span<const double> u, const ShellPlan& plan,
                                     const Kernel& kernel) {
  return parallel_map(static_cast<std::size_t>(plan.shells), [&](std::size_t js) {
    const int j = static_cast<int>(js);
    const double t = plan.step(j);
    const double rho = plan.radius(j);
    std::vector<ExtReal> vals;
    const Point yc = step_point(x, t, u);
    vals.push_back(kernel(f.evaluate(yc), t, realized(x, t, yc)));
    if (rho > 0 && plan.offsets != nullptr) {
      Point up(u.size());
      for (const Point& b : *plan.offsets) {
        for (std::size_t i = 0; i < u.size(); ++i) up[i] = u[i] + rho * b[i];
        const Point y = step_point(x, t, up);
        vals.push_back(kernel(f.evaluate(y), t, realized(x, t, y)));
      }
    }
    if (plan.hints) {
      for (const SpikeHint& h : f.spike_hints) {
        for (const Point& y : h.candidates(x, t, u, rho)) {
          if (static_cast<int>(y.size()) != f.dim()) continue;
          Point up(u.size());
          double dist2 = 0.0;
          for (std::size_t i = 0; i < u.size(); ++i) {
            up[i] = (y[i] - x[i]) / t;
            dist2 += (up[i] - u[i]) * (up[i] - u[i]);
          }
          if (std::sqrt(dist2) <= rho * (1.0 + 1e-12)) vals.push_back(kernel(f.evaluate(y), t, up));
        }
      }
    }
    return ShellResult{ext_min(vals), static_cast<long>(vals.size())};
  });
}

DerivEstimate finish(const std::vector<ShellResult>& shells, int tail, double t_floor) {
  std::vector<ExtReal> minima;
  long samples = 0;
  minima.reserve(shells.size());
  for (const ShellResult& s : shells) {
    minima.push_back(s.min);
    samples += s.samples;
  }
  DerivEstimate e = aggregate_shells(std::move(minima), tail);
  e.t_floor = t_floor;
  e.samples = samples;
  return e;
}

ShellPlan ball_plan(const LiminfSchedule& sched, double floor, const std::vector<Point>& offsets) {
  ShellPlan p;
  p.shells = sched.shells;
  p.step = [&sched, floor](int j) { return std::max(sched.raw_step(j), floor); };
  p.radius = [&sched](int j) { return sched.radius(j); };
  p.offsets = &offsets;
  p.hints = true;
  return p;
}

double smallest_step(const LiminfSchedule& sched, double floor) {
  return std::max(sched.raw_step(sched.shells - 1), floor);
}

double snap(const DerivEstimate& e) { return e.sign == Sign::zero ? 0.0 : e.value.value(); }

}  // namespace

std::string to_string(Sign s) {
  switch (s) {
    case Sign::positive: return "positive";
    case Sign::zero: return "zero";
    case Sign::negative: return "negative";
    case Sign::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Sign sign_from_string(const std::string& s) {
  if (s == "positive") return Sign::positive;
  if (s == "zero") return Sign::zero;
  if (s == "negative") return Sign::negative;
  if (s == "inconclusive") return Sign::inconclusive;
  throw DomainError("unknown sign '" + s + "'");
}

void to_json(nlohmann::json& j, const DerivEstimate& e) {
  j = nlohmann::json{{"value", e.value},         {"shell_minima", e.shell_minima},
                     {"converged", e.converged}, {"sign", to_string(e.sign)},
                     {"eps_used", e.eps_used},   {"t_floor", e.t_floor},
                     {"samples", e.samples}};
}

void from_json(const nlohmann::json& j, DerivEstimate& e) {
  e.value = j.at("value").get<ExtReal>();
  e.shell_minima = j.at("shell_minima").get<std::vector<ExtReal>>();
  e.converged = j.at("converged").get<bool>();
  e.sign = sign_from_string(j.at("sign").get<std::string>());
  e.eps_used = j.at("eps_used").get<double>();
  e.t_floor = j.at("t_floor").get<double>();
  e.samples = j.at("samples").get<long>();
}

Sign decide_sign(const ExtReal& value, bool converged, double eps) {
  if (value.is_pos_inf()) return Sign::positive;
  if (value.is_neg_inf()) return Sign::negative;
  const double v = value.value();
  if (v > eps) return Sign::positive;
  if (v < -eps) return Sign::negative;
  return converged ? Sign::zero : Sign::inconclusive;
}

DerivEstimate aggregate_shells(std::vector<ExtReal> shell_minima, int tail) {
  if (shell_minima.empty()) throw DomainError("empty sample set");
  if (tail < 1) throw DomainError("tail must be >= 1");
  const std::size_t k = std::min(shell_minima.size(), static_cast<std::size_t>(tail));
  const std::span<const ExtReal> window(shell_minima.data() + shell_minima.size() - k, k);
  DerivEstimate e;
  e.value = ext_min(window);
  const ExtReal hi = ext_max(window);
  if (e.value.is_finite() && hi.is_finite()) {
    const double v = e.value.value();
    e.converged = hi.value() - v <= kSpreadTol * (1.0 + std::abs(v));
    e.eps_used = kSignTol * (1.0 + std::abs(v));
  } else {
    e.converged = e.value == hi;
    e.eps_used = kSignTol;
  }
  e.sign = decide_sign(e.value, e.converged, e.eps_used);
  e.shell_minima = std::move(shell_minima);
  return e;
}

ExtReal delta_n(const FunctionSpec& f, std::span<const double> x, const MultiplierChain& chain,
                double t, std::span<const double> u_prime) {
  check_direction(f, u_prime);
  if (chain.dim() != 0 && chain.dim() != f.dim())
    throw DomainError("multiplier chain dimension mismatch");
  if (!(t > 0) || !std::isfinite(t)) throw DomainError("step t must be > 0");
  const double fx = base_value(f, x);
  const int n = chain.order();
  const ExtReal fy = f.evaluate(step_point(x, t, u_prime));
  return scaled_quotient(fy, fx + chain_sum(chain, t, u_prime).first, t, n, factorial(n));
}

double step_floor(const FunctionSpec& f, std::span<const double> x,
                  const MultiplierChain& chain, std::span<const double> u,
                  const LiminfSchedule& sched) {
  sched.validate();
  const int n = chain.order();
  if (sched.order_floor_policy == FloorPolicy::fixed) return std::min(fixed_floor(n), sched.t0);
  const double fx = base_value(f, x);
  double floor = sched.t0;
  for (int j = 0; j < sched.shells; ++j) {
    const double t = sched.raw_step(j);
    const Point y = step_point(x, t, u);
    const ExtReal fy = f.evaluate(y);
    const auto [s, a] = chain_sum(chain, t, realized(x, t, y));
    if (!admissible(fx, fy, t, n, a, fx + s)) break;
    floor = t;
  }
  return floor;
}

DerivEstimate hadamard_deriv(const FunctionSpec& f, std::span<const double> x,
                             const MultiplierChain& chain, std::span<const double> u,
                             const LiminfSchedule& sched) {
  sched.validate();
  check_direction(f, u);
  if (chain.dim() != 0 && chain.dim() != f.dim())
    throw DomainError("multiplier chain dimension mismatch");
  const double fx = base_value(f, x);
  const int n = chain.order();
  const double nf = factorial(n);
  const double floor = step_floor(f, x, chain, u, sched);
  const std::vector<Point> offsets = ball_offsets(f.dim(), sched.directions_for(f.dim()), sched.seed);
  const Kernel kernel = [&](const ExtReal& fy, double t, std::span<const double> up) {
    return scaled_quotient(fy, fx + chain_sum(chain, t, up).first, t, n, nf);
  };
  return finish(scan_shells(f, x, u, ball_plan(sched, floor, offsets), kernel), sched.tail,
                smallest_step(sched, floor));
}

DerivEstimate studniarski_deriv(const FunctionSpec& f, std::span<const double> x, int n,
                                std::span<const double> u, const LiminfSchedule& sched) {
  check_order(n);
  sched.validate();
  check_direction(f, u);
  const double fx = base_value(f, x);
  const double floor = step_floor(f, x, MultiplierChain::zero(n, f.dim()), u, sched);
  const std::vector<Point> offsets = ball_offsets(f.dim(), sched.directions_for(f.dim()), sched.seed);
  const Kernel kernel = [&](const ExtReal& fy, double t, std::span<const double>) {
    return scaled_quotient(fy, fx, t, n, 1.0);
  };
  return finish(scan_shells(f, x, u, ball_plan(sched, floor, offsets), kernel), sched.tail,
                smallest_step(sched, floor));
}

DerivEstimate demyanov_deriv(const FunctionSpec& f, std::span<const double> x, int n,
                             const LiminfSchedule& sched) {
  check_order(n);
  sched.validate();
  const double fx = base_value(f, x);
  const int d = f.dim();
  const std::vector<Point> dirs = sphere_directions(d, sched.directions_for(d), sched.seed);

  double floor = sched.t0;
  if (sched.order_floor_policy == FloorPolicy::fixed) {
    floor = std::min(fixed_floor(n), sched.t0);
  } else {
    for (int j = 0; j < sched.shells; ++j) {
      const double r = sched.raw_step(j);
      bool ok = true;
      for (const Point& s : dirs) {
        const Point y = step_point(x, r, s);
        ok = admissible(fx, f.evaluate(y), norm2(realized(x, 1.0, y)), n, 0.0, fx);
        if (!ok) break;
      }
      if (!ok) break;
      floor = r;
    }
  }

  const auto shells = parallel_map(static_cast<std::size_t>(sched.shells), [&](std::size_t js) {
    const int j = static_cast<int>(js);
    const double r = std::max(sched.raw_step(j), floor);
    std::vector<ExtReal> vals;
    vals.reserve(dirs.size());
    for (const Point& s : dirs) {
      const Point y = step_point(x, r, s);
      vals.push_back(scaled_quotient(f.evaluate(y), fx, norm2(realized(x, 1.0, y)), n, 1.0));
    }
    for (const SpikeHint& h : f.spike_hints) {
      for (const Point& s : dirs) {
        for (const Point& y : h.candidates(x, r, s, sched.radius(j))) {
          if (static_cast<int>(y.size()) != d) continue;
          Point diff(y.size());
          for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - x[i];
          const double dist = norm2(diff);
          if (dist <= 0 || dist > r * (1.0 + sched.radius(j))) continue;
          vals.push_back(scaled_quotient(f.evaluate(y), fx, dist, n, 1.0));
        }
      }
    }
    return ShellResult{ext_min(vals), static_cast<long>(vals.size())};
  });
  return finish(shells, sched.tail, smallest_step(sched, floor));
}

std::vector<DerivEstimate> dini_ladder(const FunctionSpec& f, std::span<const double> x, int n,
                                       std::span<const double> u, const LiminfSchedule& sched,
                                       bool partial) {
  check_order(n);
  sched.validate();
  check_direction(f, u);
  const double fx = base_value(f, x);
  std::vector<DerivEstimate> out;
  std::vector<double> coeffs;  // snapped lower-order values
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      const DerivEstimate& prev = out.back();
      if (!prev.value.is_finite()) {
        if (partial) break;
        throw UndefinedError("Dini order-" + std::to_string(k) + " undefined");
      }
      coeffs.push_back(snap(prev));
    }
    const double floor = step_floor(f, x, MultiplierChain::zero(k, f.dim()), u, sched);
    ShellPlan plan;
    plan.shells = sched.shells;
    plan.step = [&sched, floor](int j) { return std::max(sched.raw_step(j), floor); };
    plan.radius = [](int) { return 0.0; };
    const double kf = factorial(k);
    const Kernel kernel = [&](const ExtReal& fy, double t, std::span<const double>) {
      double s = 0.0;
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const int ord = static_cast<int>(i) + 1;
        s += ipow(t, ord) / factorial(ord) * coeffs[i];
      }
      return scaled_quotient(fy, fx + s, t, k, kf);
    };
    out.push_back(finish(scan_shells(f, x, u, plan, kernel), sched.tail, smallest_step(sched, floor)));
  }
  return out;
}

DerivEstimate dini_deriv(const FunctionSpec& f, std::span<const double> x, int n,
                         std::span<const double> u, const LiminfSchedule& sched) {
  return dini_ladder(f, x, n, u, sched).back();
}

std::vector<DerivEstimate> ginchev_ladder(const FunctionSpec& f, std::span<const double> x, int n,
                                          std::span<const double> u, const LiminfSchedule& sched,
                                          bool partial) {
  if (n < 0) throw DomainError("Ginchev order must be >= 0");
  sched.validate();
  check_direction(f, u);
  const double fx = base_value(f, x);
  const std::vector<Point> offsets = ball_offsets(f.dim(), sched.directions_for(f.dim()), sched.seed);
  std::vector<DerivEstimate> out;
  std::vector<double> coeffs;  // snapped lower-order values, order 0 first
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      const DerivEstimate& prev = out.back();
      if (!prev.value.is_finite()) {
        if (partial) break;
        throw UndefinedError("Ginchev order-" + std::to_string(k) + " undefined");
      }
      if (k == 1) {
        coeffs.push_back(prev.sign == Sign::zero ? fx : prev.value.value());
      } else {
        coeffs.push_back(snap(prev));
      }
    }
    const double floor = step_floor(f, x, MultiplierChain::zero(std::max(k, 1), f.dim()), u, sched);
    const double kf = factorial(k);
    const Kernel kernel = [&](const ExtReal& fy, double t, std::span<const double>) -> ExtReal {
      if (k == 0) return fy;
      double s = 0.0;
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const int ord = static_cast<int>(i);
        s += ipow(t, ord) / factorial(ord) * coeffs[i];
      }
      return scaled_quotient(fy, s, t, k, kf);
    };
    DerivEstimate e = finish(scan_shells(f, x, u, ball_plan(sched, floor, offsets), kernel),
                             sched.tail, smallest_step(sched, floor));
    if (k == 0) {
      // Order-0 sign is taken relative to f(x).
      const ExtReal diff = e.value + ExtReal(-fx);
      e.eps_used = kSignTol * (1.0 + std::abs(fx));
      e.sign = decide_sign(diff, e.converged, e.eps_used);
    }
    out.push_back(std::move(e));
  }
  return out;
}

DerivEstimate ginchev_deriv(const FunctionSpec& f, std::span<const double> x, int n,
                            std::span<const double> u, const LiminfSchedule& sched) {
  return ginchev_ladder(f, x, n, u, sched).back();
}

ExtReal brute_liminf(const FunctionSpec& f, std::span<const double> x,
                     const MultiplierChain& chain, std::span<const double> u,
                     const LiminfSchedule& base) {
  base.validate();
  check_direction(f, u);
  if (chain.dim() != 0 && chain.dim() != f.dim())
    throw DomainError("multiplier chain dimension mismatch");
  constexpr int kShellFactor = 10;
  constexpr int kDirFactor = 20;
  const double fx = base_value(f, x);
  const int n = chain.order();
  const double nf = factorial(n);
  const double floor = step_floor(f, x, chain, u, base);
  const int d = f.dim();
  const int m = kDirFactor * base.directions_for(d);
  std::vector<Point> offsets = ball_offsets(d, m, base.seed);
  if (d == 1) {
    HaltonSequence h(1, base.seed);
    for (std::uint64_t k = 0; static_cast<int>(offsets.size()) < m; ++k)
      offsets.push_back({2.0 * h.at(k)[0] - 1.0});
  }
  ShellPlan plan;
  plan.shells = kShellFactor * base.shells;
  plan.step = [&base, floor](int k) {
    return std::max(base.t0 * std::pow(base.ratio, k / static_cast<double>(kShellFactor)), floor);
  };
  plan.radius = [&base](int k) {
    return base.dir_radius0 * std::pow(base.ratio, k / static_cast<double>(kShellFactor));
  };
  plan.offsets = &offsets;
  plan.hints = true;
  const Kernel kernel = [&](const ExtReal& fy, double t, std::span<const double> up) {
    return scaled_quotient(fy, fx + chain_sum(chain, t, up).first, t, n, nf);
  };
  const auto shells = scan_shells(f, x, u, plan, kernel);
  std::vector<ExtReal> window;
  const int tail = kShellFactor * base.tail;
  for (int k = plan.shells - tail; k < plan.shells; ++k)
    window.push_back(shells[static_cast<std::size_t>(k)].min);
  return ext_min(window);
}

}  // namespace hodd
