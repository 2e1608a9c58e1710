#include "hodd/classify.hpp"

#include <string>

#include "hodd/errors.hpp"
#include "hodd/json_util.hpp"
#include "hodd/parallel.hpp"
#include "hodd/sampling.hpp"

namespace hodd {

namespace {

constexpr std::size_t kChunk = 8;

template <class Stop>
std::vector<DerivEstimate> hadamard_ladder(const FunctionSpec& f, std::span<const double> x,
                                           std::span<const double> u, int max_k,
                                           const LiminfSchedule& sched, Stop stop) {
  std::vector<DerivEstimate> out;
  for (int k = 1; k <= max_k; ++k) {
    out.push_back(hadamard_deriv(f, x, MultiplierChain::zero(k, f.dim()), u, sched));
    if (stop(out.back())) break;
  }
  return out;
}

// Stationarity of order n−1 as a precondition; nullopt when it holds.
std::optional<TriState> lower_stationarity(const FunctionSpec& f, std::span<const double> x, int n,
                                           const LiminfSchedule& sched, int sphere_samples) {
  if (n <= 1) return std::nullopt;
  const auto ladder = zero_in_subdiff_ladder(f, x, n - 1, sched, sphere_samples);
  const TriState& last = ladder.back();
  if (last.verdict == Verdict::holds && static_cast<int>(ladder.size()) == n - 1)
    return std::nullopt;
  TriState t = last;
  t.note = "not stationary of order " + std::to_string(n - 1) + ": " + last.note;
  return t;
}

Sign infimum_sign(const std::vector<Sign>& signs) {
  bool inc = false;
  bool zero = false;
  for (Sign s : signs) {
    if (s == Sign::negative) return Sign::negative;
    inc = inc || s == Sign::inconclusive;
    zero = zero || s == Sign::zero;
  }
  if (inc) return Sign::inconclusive;
  return zero ? Sign::zero : Sign::positive;
}

TableEntry infimum_entry(const std::vector<DerivEstimate>& ests) {
  TableEntry e;
  e.value = ExtReal::pos_inf();
  std::vector<Sign> signs;
  for (const DerivEstimate& d : ests) {
    if (d.value < e.value) e.value = d.value;
    signs.push_back(d.sign);
  }
  e.sign = infimum_sign(signs);
  return e;
}

// Aggregates per-direction cell outcomes: any failure wins, then undefined,
// then inconclusive.
ConditionCell combine(int order, const std::vector<CellStatus>& per_dir,
                      const std::vector<Point>& dirs, std::string fail_note) {
  ConditionCell c;
  c.order = order;
  bool undef = false;
  bool inc = false;
  for (std::size_t i = 0; i < per_dir.size(); ++i) {
    if (per_dir[i] == CellStatus::fails) {
      c.status = CellStatus::fails;
      c.witness = dirs[i];
      c.note = std::move(fail_note);
      return c;
    }
    undef = undef || per_dir[i] == CellStatus::undefined;
    inc = inc || per_dir[i] == CellStatus::inconclusive;
  }
  c.status = undef ? CellStatus::undefined : inc ? CellStatus::inconclusive : CellStatus::holds;
  return c;
}

}  // namespace

StationaryOrder stationary_order(const FunctionSpec& f, std::span<const double> x, int max_n,
                                 const LiminfSchedule& sched, int sphere_samples) {
  if (max_n < 1) throw DomainError("max order must be >= 1");
  StationaryOrder out;
  out.ladder = zero_in_subdiff_ladder(f, x, max_n, sched, sphere_samples);
  for (const TriState& t : out.ladder) {
    if (t.verdict != Verdict::holds) {
      out.inconclusive = t.verdict == Verdict::inconclusive;
      break;
    }
    ++out.order;
  }
  return out;
}

CriticalScan critical_scan(const FunctionSpec& f, std::span<const double> x, int m,
                           const LiminfSchedule& sched, int sphere_samples) {
  if (m < 1) throw DomainError("critical direction order must be >= 1");
  if (lower_stationarity(f, x, m, sched, sphere_samples))
    throw DomainError("critical directions of order " + std::to_string(m) +
                      " need stationarity of order " + std::to_string(m - 1));
  const std::vector<Point> dirs = sphere_directions(f.dim(), sphere_samples, sched.seed);
  const auto ladders = parallel_map(dirs.size(), [&](std::size_t i) {
    return hadamard_ladder(f, x, dirs[i], m, sched, [](const DerivEstimate& e) {
      return e.sign == Sign::positive;
    });
  });
  CriticalScan out;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    bool positive = false;
    bool inc = false;
    for (const DerivEstimate& e : ladders[i]) {
      positive = positive || e.sign == Sign::positive;
      inc = inc || e.sign == Sign::inconclusive;
    }
    if (positive) continue;
    (inc ? out.undecided : out.critical).push_back(dirs[i]);
  }
  return out;
}

std::vector<Point> critical_directions(const FunctionSpec& f, std::span<const double> x, int m,
                                       const LiminfSchedule& sched, int sphere_samples) {
  return critical_scan(f, x, m, sched, sphere_samples).critical;
}

TriState check_necessary(const FunctionSpec& f, std::span<const double> x, int max_n,
                         const LiminfSchedule& sched, int sphere_samples) {
  const StationaryOrder s = stationary_order(f, x, max_n, sched, sphere_samples);
  if (s.order == max_n) {
    TriState t = s.ladder.back();
    t.note = "stationary of order " + std::to_string(max_n);
    return t;
  }
  return s.ladder.back();
}

StrictSufficient check_strict_sufficient(const FunctionSpec& f, std::span<const double> x,
                                         int max_n, const LiminfSchedule& sched,
                                         int sphere_samples) {
  if (max_n < 1) throw DomainError("max order must be >= 1");
  const std::vector<Point> dirs = sphere_directions(f.dim(), sphere_samples, sched.seed);
  const auto ladders = parallel_map(dirs.size(), [&](std::size_t i) {
    return hadamard_ladder(f, x, dirs[i], max_n, sched,
                           [](const DerivEstimate& e) { return e.sign != Sign::zero; });
  });
  StrictSufficient out;
  out.result.directions = static_cast<int>(dirs.size());
  out.result.margin = ExtReal::pos_inf();
  bool inc = false;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const DerivEstimate& last = ladders[i].back();
    const int k = static_cast<int>(ladders[i].size());
    DirectionOrder d{dirs[i], std::nullopt};
    if (last.value < out.result.margin) out.result.margin = last.value;
    if (last.sign == Sign::positive) {
      d.n = k;
    } else if (last.sign == Sign::negative) {
      if (!out.result.witness) {
        out.result.witness = dirs[i];
        out.result.order = k;
      }
    } else {
      inc = true;
    }
    out.n_of_u.push_back(std::move(d));
  }
  if (out.result.witness) {
    out.result.verdict = Verdict::fails;
    out.result.note = "negative order-" + std::to_string(*out.result.order) + " derivative";
  } else if (inc) {
    out.result.verdict = Verdict::inconclusive;
    out.result.note = "no positive order up to " + std::to_string(max_n) + " in some direction";
  } else {
    out.result.verdict = Verdict::holds;
  }
  return out;
}

std::string to_string(IsolationMode m) {
  return m == IsolationMode::full_sphere ? "full_sphere" : "critical_only";
}

TriState check_isolated(const FunctionSpec& f, std::span<const double> x, int n,
                        const LiminfSchedule& sched, int sphere_samples, IsolationMode mode,
                        std::optional<int> critical_order) {
  if (n < 1) throw DomainError("order must be >= 1");
  if (auto pre = lower_stationarity(f, x, n, sched, sphere_samples)) return *pre;
  const MultiplierChain chain = MultiplierChain::zero(n, f.dim());
  TriState out;
  out.margin = ExtReal::pos_inf();

  std::vector<Point> dirs;
  std::vector<DerivEstimate> ests;
  bool undecided = false;
  if (mode == IsolationMode::full_sphere) {
    dirs = sphere_directions(f.dim(), sphere_samples, sched.seed);
    ests = chunked_scan(
        dirs.size(), kChunk, [&](std::size_t i) { return hadamard_deriv(f, x, chain, dirs[i], sched); },
        [](const DerivEstimate& e) { return e.sign == Sign::zero || e.sign == Sign::negative; });
  } else {
    const int m = critical_order.value_or(n);
    if (m < 1 || m > n) throw DomainError("critical order must lie in [1, n]");
    const CriticalScan scan = critical_scan(f, x, m, sched, sphere_samples);
    dirs = scan.critical;
    undecided = !scan.undecided.empty();
    ests = parallel_map(dirs.size(), [&](std::size_t i) {
      return hadamard_deriv(f, x, chain, dirs[i], sched);
    });
  }
  out.directions = static_cast<int>(dirs.size());
  bool inc = undecided;
  for (std::size_t i = 0; i < ests.size(); ++i) {
    if (ests[i].value < out.margin) out.margin = ests[i].value;
    if ((ests[i].sign == Sign::zero || ests[i].sign == Sign::negative) && !out.witness) {
      out.witness = dirs[i];
      out.order = n;
    }
    inc = inc || ests[i].sign == Sign::inconclusive;
  }
  if (out.witness) {
    out.verdict = Verdict::fails;
    out.note = "order-" + std::to_string(n) + " derivative not positive";
  } else if (inc) {
    out.verdict = Verdict::inconclusive;
    out.note = "order-" + std::to_string(n) + " sign undecided in some direction";
  } else {
    out.verdict = Verdict::holds;
  }
  return out;
}

std::string to_string(LeastOrderStatus s) {
  switch (s) {
    case LeastOrderStatus::found: return "found";
    case LeastOrderStatus::none: return "none";
    case LeastOrderStatus::not_candidate: return "not_candidate";
    case LeastOrderStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

LeastOrderStatus least_order_status_from_string(const std::string& s) {
  if (s == "found") return LeastOrderStatus::found;
  if (s == "none") return LeastOrderStatus::none;
  if (s == "not_candidate") return LeastOrderStatus::not_candidate;
  if (s == "inconclusive") return LeastOrderStatus::inconclusive;
  throw DomainError("unknown least-order status '" + s + "'");
}

LeastIsolatedOrder least_isolated_order(const FunctionSpec& f, std::span<const double> x,
                                        int max_n, const LiminfSchedule& sched) {
  if (max_n < 1) throw DomainError("max order must be >= 1");
  LeastIsolatedOrder out;
  for (int k = 1; k <= max_n; ++k) {
    out.demyanov.push_back(demyanov_deriv(f, x, k, sched));
    const Sign s = out.demyanov.back().sign;
    if (s == Sign::zero) continue;
    if (s == Sign::positive) {
      out.status = LeastOrderStatus::found;
      out.order = k;
    } else if (s == Sign::negative) {
      out.status = LeastOrderStatus::not_candidate;
    } else {
      out.status = LeastOrderStatus::inconclusive;
    }
    return out;
  }
  out.status = LeastOrderStatus::none;
  return out;
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::holds: return "holds";
    case CellStatus::fails: return "fails";
    case CellStatus::inconclusive: return "inconclusive";
    case CellStatus::undefined: return "undefined";
  }
  return "inconclusive";
}

CellStatus cell_status_from_string(const std::string& s) {
  if (s == "holds") return CellStatus::holds;
  if (s == "fails") return CellStatus::fails;
  if (s == "inconclusive") return CellStatus::inconclusive;
  if (s == "undefined") return CellStatus::undefined;
  throw DomainError("unknown condition status '" + s + "'");
}

void to_json(nlohmann::json& j, const ConditionTable& t) {
  j = nlohmann::json::object();
  j["max_n"] = t.max_n;
  nlohmann::json rows = nlohmann::json::object();
  for (const auto& [fam, cells] : t.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (const ConditionCell& c : cells) {
      nlohmann::json cj{{"status", to_string(c.status)}, {"note", c.note}};
      cj["witness"] = c.witness ? nlohmann::json(*c.witness) : nlohmann::json(nullptr);
      r[std::to_string(c.order)] = cj;
    }
    rows[fam] = r;
  }
  j["rows"] = rows;
}

void from_json(const nlohmann::json& j, ConditionTable& t) {
  t.max_n = j.at("max_n").get<int>();
  t.rows.clear();
  for (const auto& [fam, r] : j.at("rows").items()) {
    std::map<int, ConditionCell> ordered;
    for (const auto& [k, cj] : r.items()) {
      ConditionCell c;
      c.order = std::stoi(k);
      c.status = cell_status_from_string(cj.at("status").get<std::string>());
      c.note = cj.at("note").get<std::string>();
      if (!cj.at("witness").is_null()) c.witness = cj.at("witness").get<Point>();
      ordered[c.order] = c;
    }
    for (auto& [_, c] : ordered) t.rows[fam].push_back(c);
  }
}

ConditionTable condition_table(const FunctionSpec& f, std::span<const double> x, int max_n,
                               const LiminfSchedule& sched, int sphere_samples) {
  if (max_n < 1) throw DomainError("max order must be >= 1");
  ConditionTable table;
  table.max_n = max_n;
  const std::vector<Point> dirs = sphere_directions(f.dim(), sphere_samples, sched.seed);

  // (D_k): Dini derivative of order k is >= 0 wherever all lower orders vanish.
  const auto dini = parallel_map(dirs.size(), [&](std::size_t i) {
    return dini_ladder(f, x, max_n, dirs[i], sched, true);
  });
  for (int k = 1; k <= max_n; ++k) {
    std::vector<CellStatus> per;
    for (const auto& lad : dini) {
      CellStatus s = CellStatus::holds;
      bool antecedent = true;
      for (int i = 0; i < k - 1 && antecedent; ++i) {
        const Sign li = lad[static_cast<std::size_t>(i)].sign;
        if (li == Sign::inconclusive) {
          s = CellStatus::inconclusive;
          antecedent = false;
        } else if (li != Sign::zero) {
          antecedent = false;
        }
      }
      if (antecedent) {
        if (static_cast<int>(lad.size()) < k) {
          s = CellStatus::undefined;
        } else {
          const Sign sk = lad[static_cast<std::size_t>(k - 1)].sign;
          s = sk == Sign::negative ? CellStatus::fails
              : sk == Sign::inconclusive ? CellStatus::inconclusive
                                         : CellStatus::holds;
        }
      }
      per.push_back(s);
    }
    table.rows["D"].push_back(combine(k, per, dirs, "negative Dini derivative of order " +
                                                        std::to_string(k)));
  }

  // (N_k): 0 in the order-k subdifferential; undefined once a lower order fails.
  const auto nl = zero_in_subdiff_ladder(f, x, max_n, sched, sphere_samples);
  for (int k = 1; k <= max_n; ++k) {
    ConditionCell c;
    c.order = k;
    if (k <= static_cast<int>(nl.size())) {
      const TriState& t = nl[static_cast<std::size_t>(k - 1)];
      c.status = t.verdict == Verdict::holds  ? CellStatus::holds
                 : t.verdict == Verdict::fails ? CellStatus::fails
                                               : CellStatus::inconclusive;
      c.witness = t.witness;
      c.note = t.note;
    } else if (nl.back().verdict == Verdict::fails) {
      c.status = CellStatus::undefined;
      c.note = "lower-order condition fails";
    } else {
      c.status = CellStatus::inconclusive;
      c.note = "lower-order condition undecided";
    }
    table.rows["N"].push_back(c);
  }

  // (S_k): the sufficient conditions for an isolated minimizer of order k.
  for (int k = 1; k <= max_n; ++k) {
    const TriState t = check_isolated(f, x, k, sched, sphere_samples, IsolationMode::full_sphere);
    ConditionCell c;
    c.order = k;
    c.status = t.verdict == Verdict::holds  ? CellStatus::holds
               : t.verdict == Verdict::fails ? CellStatus::fails
                                             : CellStatus::inconclusive;
    c.witness = t.witness;
    c.note = t.note;
    table.rows["S"].push_back(c);
  }

  // (G_k): every direction satisfies some (G_j), j <= k.
  const auto gin = parallel_map(dirs.size(), [&](std::size_t i) {
    return ginchev_ladder(f, x, max_n, dirs[i], sched, true);
  });
  std::vector<int> first_holding(dirs.size(), -1);
  std::vector<int> broken_at(dirs.size(), -1);
  std::vector<bool> broken_inc(dirs.size(), false);
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    for (std::size_t i = 0; i < gin[d].size(); ++i) {
      const Sign s = gin[d][i].sign;
      if (s == Sign::zero) continue;
      if (s == Sign::positive) {
        first_holding[d] = static_cast<int>(i);
      } else {
        broken_at[d] = static_cast<int>(i);
        broken_inc[d] = s == Sign::inconclusive;
      }
      break;
    }
  }
  for (int k = 1; k <= max_n; ++k) {
    std::vector<CellStatus> per;
    for (std::size_t d = 0; d < dirs.size(); ++d) {
      if (first_holding[d] >= 0 && first_holding[d] <= k) {
        per.push_back(CellStatus::holds);
      } else if (broken_at[d] >= 0 && broken_at[d] <= k && broken_inc[d]) {
        per.push_back(CellStatus::inconclusive);
      } else {
        per.push_back(CellStatus::fails);
      }
    }
    table.rows["G"].push_back(
        combine(k, per, dirs, "no Ginchev condition of order <= " + std::to_string(k)));
  }
  return table;
}

bool PointReport::any_inconclusive() const {
  if (stationary_inconclusive) return true;
  if (necessary.verdict == Verdict::inconclusive) return true;
  if (strict_sufficient.result.verdict == Verdict::inconclusive) return true;
  for (const auto& [_, t] : isolated)
    if (t.verdict == Verdict::inconclusive) return true;
  return least_status == LeastOrderStatus::inconclusive;
}

namespace {

void to_json(nlohmann::json& j, const TableEntry& e) {
  j = nlohmann::json{{"value", e.value}, {"sign", to_string(e.sign)}};
}

void from_json(const nlohmann::json& j, TableEntry& e) {
  e.value = j.at("value").get<ExtReal>();
  e.sign = sign_from_string(j.at("sign").get<std::string>());
}

}  // namespace

void to_json(nlohmann::json& j, const PointReport& r) {
  j = nlohmann::json::object();
  j["point"] = r.point;
  j["schedule"] = r.schedule;
  j["seed"] = r.seed;
  j["max_order"] = r.max_order;
  j["sphere_samples"] = r.sphere_samples;
  nlohmann::json tables = nlohmann::json::object();
  for (const auto& [fam, m] : r.tables) {
    nlohmann::json fj = nlohmann::json::object();
    for (const auto& [k, e] : m) {
      nlohmann::json ej;
      to_json(ej, e);
      fj[std::to_string(k)] = ej;
    }
    tables[fam] = fj;
  }
  j["tables"] = tables;
  j["stationary_order"] = r.stationary_order;
  j["stationary_inconclusive"] = r.stationary_inconclusive;
  j["critical_dirs"] = int_keyed(r.critical_dirs);

  nlohmann::json v = nlohmann::json::object();
  v["necessary_n"] = r.necessary;
  nlohmann::json ss = r.strict_sufficient.result;
  nlohmann::json nu = nlohmann::json::array();
  for (const DirectionOrder& d : r.strict_sufficient.n_of_u)
    nu.push_back({{"direction", d.direction}, {"n", d.n ? nlohmann::json(*d.n) : nlohmann::json(nullptr)}});
  ss["n_of_u"] = nu;
  v["strict_sufficient"] = ss;
  v["isolated_n"] = int_keyed(r.isolated);
  v["least_isolated_order"] = {{"status", to_string(r.least_status)},
                               {"order", r.least_order ? nlohmann::json(*r.least_order)
                                                       : nlohmann::json(nullptr)}};
  nlohmann::json dv = nlohmann::json::object();
  for (const auto& [k, e] : r.demyanov_values) {
    nlohmann::json ej;
    to_json(ej, e);
    dv[std::to_string(k)] = ej;
  }
  v["demyanov_values"] = dv;
  j["verdicts"] = v;
}

void from_json(const nlohmann::json& j, PointReport& r) {
  r.point = j.at("point").get<Point>();
  r.schedule = j.at("schedule").get<LiminfSchedule>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.max_order = j.at("max_order").get<int>();
  r.sphere_samples = j.at("sphere_samples").get<int>();
  r.tables.clear();
  for (const auto& [fam, fj] : j.at("tables").items())
    for (const auto& [k, ej] : fj.items()) {
      TableEntry e;
      from_json(ej, e);
      r.tables[fam][std::stoi(k)] = e;
    }
  r.stationary_order = j.at("stationary_order").get<int>();
  r.stationary_inconclusive = j.at("stationary_inconclusive").get<bool>();
  r.critical_dirs = from_int_keyed<std::vector<Point>>(j.at("critical_dirs"));
  const nlohmann::json& v = j.at("verdicts");
  r.necessary = v.at("necessary_n").get<TriState>();
  r.strict_sufficient.result = v.at("strict_sufficient").get<TriState>();
  r.strict_sufficient.n_of_u.clear();
  for (const auto& d : v.at("strict_sufficient").at("n_of_u")) {
    DirectionOrder o{d.at("direction").get<Point>(), std::nullopt};
    if (!d.at("n").is_null()) o.n = d.at("n").get<int>();
    r.strict_sufficient.n_of_u.push_back(std::move(o));
  }
  r.isolated = from_int_keyed<TriState>(v.at("isolated_n"));
  const nlohmann::json& lo = v.at("least_isolated_order");
  r.least_status = least_order_status_from_string(lo.at("status").get<std::string>());
  r.least_order.reset();
  if (!lo.at("order").is_null()) r.least_order = lo.at("order").get<int>();
  r.demyanov_values.clear();
  for (const auto& [k, ej] : v.at("demyanov_values").items()) {
    TableEntry e;
    from_json(ej, e);
    r.demyanov_values[std::stoi(k)] = e;
  }
}

PointReport analyze_point(const FunctionSpec& f, std::span<const double> x, int max_n,
                          const LiminfSchedule& sched, int sphere_samples) {
  if (max_n < 1) throw DomainError("max order must be >= 1");
  sched.validate();
  PointReport r;
  r.point.assign(x.begin(), x.end());
  r.schedule = sched;
  r.seed = sched.seed;
  r.max_order = max_n;
  r.sphere_samples = f.dim() == 1 ? 2 : sphere_samples;
  const std::vector<Point> dirs = sphere_directions(f.dim(), sphere_samples, sched.seed);

  const StationaryOrder st = stationary_order(f, x, max_n, sched, sphere_samples);
  r.stationary_order = st.order;
  r.stationary_inconclusive = st.inconclusive;

  // Zero-chain tables are defined up to one order past stationarity.
  const int had_max = std::min(max_n, st.order + 1);
  const auto had = parallel_map(dirs.size(), [&](std::size_t i) {
    std::vector<DerivEstimate> v;
    for (int k = 1; k <= had_max; ++k)
      v.push_back(hadamard_deriv(f, x, MultiplierChain::zero(k, f.dim()), dirs[i], sched));
    return v;
  });
  const auto stu = parallel_map(dirs.size(), [&](std::size_t i) {
    std::vector<DerivEstimate> v;
    for (int k = 1; k <= max_n; ++k) v.push_back(studniarski_deriv(f, x, k, dirs[i], sched));
    return v;
  });
  const auto dini = parallel_map(dirs.size(), [&](std::size_t i) {
    return dini_ladder(f, x, max_n, dirs[i], sched, true);
  });
  const auto gin = parallel_map(dirs.size(), [&](std::size_t i) {
    return ginchev_ladder(f, x, max_n, dirs[i], sched, true);
  });
  auto column = [&](const std::vector<std::vector<DerivEstimate>>& per_dir, std::size_t idx) {
    std::vector<DerivEstimate> col;
    for (const auto& v : per_dir)
      if (idx < v.size()) col.push_back(v[idx]);
    return col;
  };
  for (int k = 1; k <= max_n; ++k) {
    const std::size_t i = static_cast<std::size_t>(k - 1);
    if (k <= had_max) r.tables["hadamard"][k] = infimum_entry(column(had, i));
    r.tables["studniarski"][k] = infimum_entry(column(stu, i));
    if (auto c = column(dini, i); !c.empty()) r.tables["dini"][k] = infimum_entry(c);
  }
  for (int k = 0; k <= max_n; ++k)
    if (auto c = column(gin, static_cast<std::size_t>(k)); !c.empty())
      r.tables["ginchev"][k] = infimum_entry(c);

  for (int m = 1; m <= had_max; ++m)
    r.critical_dirs[m] = critical_directions(f, x, m, sched, sphere_samples);

  r.necessary = check_necessary(f, x, max_n, sched, sphere_samples);
  r.strict_sufficient = check_strict_sufficient(f, x, max_n, sched, sphere_samples);
  for (int k = 1; k <= max_n; ++k)
    r.isolated[k] = check_isolated(f, x, k, sched, sphere_samples, IsolationMode::full_sphere);
  const LeastIsolatedOrder lo = least_isolated_order(f, x, max_n, sched);
  r.least_status = lo.status;
  r.least_order = lo.order;
  for (int k = 1; k <= max_n; ++k) {
    const DerivEstimate e = demyanov_deriv(f, x, k, sched);
    r.demyanov_values[k] = TableEntry{e.value, e.sign};
    r.tables["demyanov"][k] = r.demyanov_values[k];
  }

  // Round to the emitted precision so the report equals its parsed JSON.
  nlohmann::json j = r;
  round_numbers(j);
  return j.get<PointReport>();
}

}  // namespace hodd
