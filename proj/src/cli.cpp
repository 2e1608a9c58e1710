#include "hodd/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hodd/classify.hpp"
#include "hodd/corpus.hpp"
#include "hodd/errors.hpp"
#include "hodd/invex.hpp"
#include "hodd/parallel.hpp"
#include "hodd/report.hpp"

namespace hodd {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << data;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Common {
  std::string func;
  int dim = 0;
  std::string point;
  std::string schedule_path;
  std::uint64_t seed = 0;
  int sphere_samples = kDefaultSphereSamples;
  CLI::Option* seed_opt = nullptr;
};

void add_function_opts(CLI::App* sub, Common& c, bool with_point) {
  sub->add_option("--func", c.func, "corpus:NAME, expr:SRC or @path")->required();
  sub->add_option("--dim", c.dim, "dimension (default: from corpus entry or point)");
  if (with_point) sub->add_option("--point", c.point, "p1,...,pd")->required();
  sub->add_option("--schedule", c.schedule_path, "schedule JSON file");
  sub->add_option("--sphere-samples", c.sphere_samples, "sampled unit directions for d >= 2")
      ->check(CLI::PositiveNumber);
}

LiminfSchedule load_schedule(const Common& c, bool seed_given) {
  LiminfSchedule s;
  if (!c.schedule_path.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(c.schedule_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw DomainError("schedule file: " + std::string(e.what()));
    }
    s = j.get<LiminfSchedule>();
  }
  if (seed_given || c.schedule_path.empty()) s.seed = c.seed;
  s.validate();
  return s;
}

struct Resolved {
  FunctionSpec f;
  Point x;
};

Resolved resolve(const Common& c) {
  Point x = parse_point(c.point);
  const int dim = c.dim > 0 ? c.dim : (c.func.rfind("corpus:", 0) == 0 ? 0 : static_cast<int>(x.size()));
  FunctionSpec f = resolve_function(c.func, dim);
  if (static_cast<int>(x.size()) != f.dim())
    throw DomainError("point has " + std::to_string(x.size()) + " components, function has dimension " +
                      std::to_string(f.dim()));
  return {std::move(f), std::move(x)};
}

void emit(std::ostream& out, const std::string& path, const std::string& data) {
  if (path.empty())
    out << data;
  else
    write_file(path, data);
}

}  // namespace

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw DomainError("bad point component '" + item + "'");
    p.push_back(v);
  }
  if (p.empty()) throw DomainError("empty point");
  return p;
}

FunctionSpec resolve_function(const std::string& source, int dim) {
  if (source.rfind("corpus:", 0) == 0) {
    const CorpusEntry& e = corpus_lookup(source.substr(7));
    if (dim > 0 && dim != e.spec.dim())
      throw DomainError("corpus entry '" + e.name + "' has dimension " +
                        std::to_string(e.spec.dim()) + ", --dim says " + std::to_string(dim));
    return e.spec;
  }
  std::string text;
  if (source.rfind("expr:", 0) == 0) {
    text = source.substr(5);
  } else if (source.rfind("@", 0) == 0) {
    text = trim(read_file(source.substr(1)));
    if (text.rfind("expr:", 0) == 0) text = text.substr(5);
  } else {
    throw DomainError("function source must start with corpus:, expr: or @");
  }
  if (dim <= 0) throw DomainError("expressions need --dim");
  return parse_function(text, dim);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher-order directional derivatives and optimality conditions", "hodd"};
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  int threads = 0;
  c.seed_opt = app.add_option("--seed", c.seed, "sampling seed")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (default: HODD_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  int max_order = 0;
  int order = 0;
  int directions = 0;
  int grid = 41;
  std::string json_path;
  std::string csv_path;
  std::string box_text;
  std::string format = "json";

  CLI::App* analyze = app.add_subcommand("analyze", "full classification report at a point");
  add_function_opts(analyze, c, true);
  analyze->add_option("--max-order", max_order, "highest order")->required()->check(CLI::PositiveNumber);
  analyze->add_option("--json", json_path, "write the report here instead of stdout");
  analyze->add_option("--format", format, "json, csv or text")->capture_default_str();

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "order-n derivatives over sampled directions");
  add_function_opts(sweep_cmd, c, true);
  sweep_cmd->add_option("--order", order, "derivative order")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--directions", directions, "number of directions")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--csv", csv_path, "write CSV here instead of stdout");

  CLI::App* compare = app.add_subcommand("compare", "necessary/sufficient condition table");
  add_function_opts(compare, c, true);
  compare->add_option("--max-order", max_order, "highest order")->required()->check(CLI::PositiveNumber);

  CLI::App* classify = app.add_subcommand("classify", "isolation and least-order verdicts");
  add_function_opts(classify, c, true);
  classify->add_option("--max-order", max_order, "highest order")->required()->check(CLI::PositiveNumber);

  CLI::App* invex = app.add_subcommand("invex", "grid-scale invexity check of one order");
  add_function_opts(invex, c, false);
  invex->add_option("--order", order, "invexity order")->required()->check(CLI::PositiveNumber);
  invex->add_option("--box", box_text, "lo1,hi1,...")->required();
  invex->add_option("--grid", grid, "points per axis")->capture_default_str();

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "built-in test functions");
  corpus_cmd->require_subcommand(1);
  CLI::App* corpus_list = corpus_cmd->add_subcommand("list", "list corpus entries");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (threads > 0) set_thread_count(threads);
    const bool seed_given = c.seed_opt->count() > 0;

    if (corpus_list->parsed()) {
      out << corpus_listing();
      return kExitOk;
    }
    if (analyze->parsed()) {
      const ReportFormat fmt = report_format_from_string(format);
      const Resolved r = resolve(c);
      const PointReport rep = analyze_point(r.f, r.x, max_order, load_schedule(c, seed_given), c.sphere_samples);
      emit(out, json_path, emit_report(rep, fmt));
      return rep.any_inconclusive() ? kExitInconclusive : kExitOk;
    }
    if (sweep_cmd->parsed()) {
      const Resolved r = resolve(c);
      const auto rows = sweep(r.f, r.x, order, directions, load_schedule(c, seed_given));
      emit(out, csv_path, emit_sweep_csv(rows, r.f.dim()));
      for (const SweepRow& row : rows)
        if (row.sign == Sign::inconclusive) return kExitInconclusive;
      return kExitOk;
    }
    if (compare->parsed()) {
      const Resolved r = resolve(c);
      const ConditionTable t = condition_table(r.f, r.x, max_order, load_schedule(c, seed_given), c.sphere_samples);
      out << emit_condition_table_text(t) << emit_json(t);
      for (const auto& [_, cells] : t.rows)
        for (const ConditionCell& cell : cells)
          if (cell.status == CellStatus::inconclusive) return kExitInconclusive;
      return kExitOk;
    }
    if (classify->parsed()) {
      const Resolved r = resolve(c);
      const LiminfSchedule s = load_schedule(c, seed_given);
      nlohmann::json j = nlohmann::json::object();
      j["point"] = r.x;
      bool inc = false;
      nlohmann::json iso = nlohmann::json::object();
      for (int k = 1; k <= max_order; ++k) {
        const TriState t = check_isolated(r.f, r.x, k, s, c.sphere_samples);
        inc = inc || t.verdict == Verdict::inconclusive;
        iso[std::to_string(k)] = t;
      }
      j["isolated_n"] = iso;
      const LeastIsolatedOrder lo = least_isolated_order(r.f, r.x, max_order, s);
      inc = inc || lo.status == LeastOrderStatus::inconclusive;
      j["least_isolated_order"] = {
          {"status", to_string(lo.status)},
          {"order", lo.order ? nlohmann::json(*lo.order) : nlohmann::json(nullptr)}};
      out << emit_json(j);
      return inc ? kExitInconclusive : kExitOk;
    }
    if (invex->parsed()) {
      const InvexBox box = parse_box(box_text);
      const int dim = c.dim > 0 ? c.dim : (c.func.rfind("corpus:", 0) == 0 ? 0 : static_cast<int>(box.lo.size()));
      const FunctionSpec f = resolve_function(c.func, dim);
      const InvexResult res = check_invex_order(f, order, box, grid, load_schedule(c, seed_given), c.sphere_samples);
      out << emit_json(res);
      return res.result.verdict == Verdict::inconclusive ? kExitInconclusive : kExitOk;
    }
    err << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "expression error: " << e.what() << "\n";
    return kExitExprParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace hodd
