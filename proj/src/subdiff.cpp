#include "hodd/subdiff.hpp"

#include <cmath>
#include <string>

#include "hodd/errors.hpp"
#include "hodd/parallel.hpp"
#include "hodd/sampling.hpp"

namespace hodd {

namespace {

constexpr std::size_t kChunk = 8;

TriState order_check(const FunctionSpec& f, std::span<const double> x, int n,
                     const LiminfSchedule& sched, int sphere_samples) {
  const std::vector<Point> dirs = sphere_directions(f.dim(), sphere_samples, sched.seed);
  const MultiplierChain chain = MultiplierChain::zero(n, f.dim());
  const auto ests = chunked_scan(
      dirs.size(), kChunk,
      [&](std::size_t i) { return hadamard_deriv(f, x, chain, dirs[i], sched); },
      [](const DerivEstimate& e) { return e.sign == Sign::negative; });
  TriState out;
  out.directions = static_cast<int>(ests.size());
  out.margin = ExtReal::pos_inf();
  bool inconclusive = false;
  for (std::size_t i = 0; i < ests.size(); ++i) {
    if (ests[i].value < out.margin) out.margin = ests[i].value;
    if (ests[i].sign == Sign::negative && !out.witness) {
      out.witness = dirs[i];
      out.order = n;
    }
    inconclusive = inconclusive || ests[i].sign == Sign::inconclusive;
  }
  if (out.witness) {
    out.verdict = Verdict::fails;
    out.note = "negative order-" + std::to_string(n) + " derivative";
  } else if (inconclusive) {
    out.verdict = Verdict::inconclusive;
    out.note = "order-" + std::to_string(n) + " sign undecided in some direction";
  } else {
    out.verdict = Verdict::holds;
  }
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "fails") return Verdict::fails;
  if (s == "inconclusive") return Verdict::inconclusive;
  throw DomainError("unknown verdict '" + s + "'");
}

void to_json(nlohmann::json& j, const TriState& t) {
  j = nlohmann::json{{"verdict", to_string(t.verdict)},
                     {"margin", t.margin},
                     {"directions", t.directions},
                     {"note", t.note}};
  j["witness"] = t.witness ? nlohmann::json(*t.witness) : nlohmann::json(nullptr);
  j["order"] = t.order ? nlohmann::json(*t.order) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, TriState& t) {
  t.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  t.margin = j.at("margin").get<ExtReal>();
  t.directions = j.at("directions").get<int>();
  t.note = j.at("note").get<std::string>();
  t.witness.reset();
  if (!j.at("witness").is_null()) t.witness = j.at("witness").get<Point>();
  t.order.reset();
  if (!j.at("order").is_null()) t.order = j.at("order").get<int>();
}

std::vector<TriState> zero_in_subdiff_ladder(const FunctionSpec& f, std::span<const double> x,
                                             int max_n, const LiminfSchedule& sched,
                                             int sphere_samples) {
  std::vector<TriState> out;
  for (int k = 1; k <= max_n; ++k) {
    out.push_back(order_check(f, x, k, sched, sphere_samples));
    if (out.back().verdict != Verdict::holds) break;
  }
  return out;
}

TriState zero_in_subdiff(const FunctionSpec& f, std::span<const double> x, int n,
                         const LiminfSchedule& sched, int sphere_samples) {
  if (n < 1) throw DomainError("derivative order must be >= 1");
  if (n > 1) {
    const auto lower = zero_in_subdiff_ladder(f, x, n - 1, sched, sphere_samples);
    const TriState& last = lower.back();
    if (last.verdict == Verdict::fails)
      throw DomainError("lower-order subdifferential does not contain zero");
    if (last.verdict == Verdict::inconclusive || static_cast<int>(lower.size()) < n - 1) {
      TriState t = last;
      t.witness.reset();
      t.note = "lower-order membership undecided";
      return t;
    }
  }
  return order_check(f, x, n, sched, sphere_samples);
}

TriState tensor_in_subdiff(const FunctionSpec& f, std::span<const double> x,
                           const MultiplierChain& chain, const SymTensor& cand,
                           const LiminfSchedule& sched, int sphere_samples) {
  if (cand.order() != chain.order())
    throw DomainError("candidate tensor order " + std::to_string(cand.order()) +
                      " does not match derivative order " + std::to_string(chain.order()));
  if (cand.dim() != f.dim()) throw DomainError("candidate tensor dimension mismatch");
  const std::vector<Point> dirs = sphere_directions(f.dim(), sphere_samples, sched.seed);
  struct Row {
    ExtReal diff;
    Sign sign;
  };
  const auto rows = chunked_scan(
      dirs.size(), kChunk,
      [&](std::size_t i) {
        const DerivEstimate e = hadamard_deriv(f, x, chain, dirs[i], sched);
        const ExtReal diff = e.value + ExtReal(-cand.apply(dirs[i]));
        return Row{diff, decide_sign(diff, e.converged, e.eps_used)};
      },
      [](const Row& r) { return r.sign == Sign::negative; });
  TriState out;
  out.directions = static_cast<int>(rows.size());
  out.margin = ExtReal::pos_inf();
  bool inconclusive = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].diff < out.margin) out.margin = rows[i].diff;
    if (rows[i].sign == Sign::negative && !out.witness) {
      out.witness = dirs[i];
      out.order = chain.order();
    }
    inconclusive = inconclusive || rows[i].sign == Sign::inconclusive;
  }
  if (out.witness) {
    out.verdict = Verdict::fails;
    out.note = "candidate exceeds the derivative";
  } else {
    out.verdict = inconclusive ? Verdict::inconclusive : Verdict::holds;
  }
  return out;
}

void to_json(nlohmann::json& j, const Interval& i) {
  j = nlohmann::json{{"lo", i.lo}, {"hi", i.hi}, {"empty", i.empty}};
}

Interval subdiff_interval_1d(const FunctionSpec& f, std::span<const double> x, int n,
                             const LiminfSchedule& sched) {
  if (f.dim() != 1) throw DomainError("subdiff_interval_1d requires dimension 1");
  if (n < 1) throw DomainError("derivative order must be >= 1");
  if (n > 1) {
    const auto lower = zero_in_subdiff_ladder(f, x, n - 1, sched, 2);
    if (lower.back().verdict != Verdict::holds || static_cast<int>(lower.size()) < n - 1)
      throw DomainError("lower-order subdifferential does not contain zero");
  }
  const MultiplierChain chain = MultiplierChain::zero(n, 1);
  const Point plus{1.0};
  const Point minus{-1.0};
  auto snapped = [](const DerivEstimate& e) {
    return e.sign == Sign::zero ? ExtReal(0.0) : e.value;
  };
  const ExtReal dp = snapped(hadamard_deriv(f, x, chain, plus, sched));
  const ExtReal dm = snapped(hadamard_deriv(f, x, chain, minus, sched));
  Interval out;
  if (n % 2 == 0) {
    out.lo = ExtReal::neg_inf();
    out.hi = std::min(dp, dm);
  } else {
    out.lo = -dm;
    out.hi = dp;
  }
  out.empty = out.lo > out.hi || out.hi.is_neg_inf() || out.lo.is_pos_inf();
  return out;
}

}  // namespace hodd
