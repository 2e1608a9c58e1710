#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hodd/classify.hpp"
#include "hodd/cli.hpp"
#include "hodd/corpus.hpp"
#include "hodd/errors.hpp"
#include "hodd/invex.hpp"
#include "hodd/parallel.hpp"
#include "hodd/report.hpp"

namespace py = pybind11;
using namespace hodd;

namespace {

LiminfSchedule schedule_from(const std::string& json_text) {
  LiminfSchedule s;
  if (!json_text.empty()) s = nlohmann::json::parse(json_text).get<LiminfSchedule>();
  s.validate();
  return s;
}

std::string dumps(const nlohmann::json& j) { return emit_json(j); }

}  // namespace

PYBIND11_MODULE(_hodd, m) {
  m.doc() = "Higher-order directional derivatives and point classification";

  static py::exception<Error> base(m, "HoddError", PyExc_RuntimeError);
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<UndefinedError> undefined(m, "UndefinedError", base.ptr());
  static py::exception<ArithmeticError> arith(m, "ArithmeticError", base.ptr());
  static py::exception<CapacityError> capacity(m, "CapacityError", base.ptr());
  static py::exception<EvalError> eval(m, "EvalError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse(e.what());
    } catch (const DomainError& e) {
      domain(e.what());
    } catch (const UndefinedError& e) {
      undefined(e.what());
    } catch (const ArithmeticError& e) {
      arith(e.what());
    } catch (const CapacityError& e) {
      capacity(e.what());
    } catch (const EvalError& e) {
      eval(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const CorpusEntry& e : corpus()) names.push_back(e.name);
    return names;
  });
  m.def("corpus_listing", &corpus_listing);
  m.def("default_schedule", [] { return dumps(LiminfSchedule{}); });
  m.def("set_threads", &set_thread_count, py::arg("n"));

  m.def("evaluate", [](const std::string& func, int dim, const Point& x) {
    return dumps(resolve_function(func, dim).evaluate(x));
  }, py::arg("func"), py::arg("dim"), py::arg("x"));

  m.def("hadamard_zero_chain", [](const std::string& func, int dim, const Point& x, int n, const Point& u,
                                  const std::string& sched) {
    const FunctionSpec f = resolve_function(func, dim);
    return dumps(hadamard_deriv(f, x, MultiplierChain::zero(n, f.dim()), u, schedule_from(sched)));
  }, py::arg("func"), py::arg("dim"), py::arg("x"), py::arg("n"), py::arg("u"), py::arg("schedule"));

  m.def("studniarski", [](const std::string& func, int dim, const Point& x, int n, const Point& u,
                          const std::string& sched) {
    return dumps(studniarski_deriv(resolve_function(func, dim), x, n, u, schedule_from(sched)));
  }, py::arg("func"), py::arg("dim"), py::arg("x"), py::arg("n"), py::arg("u"), py::arg("schedule"));

  m.def("demyanov", [](const std::string& func, int dim, const Point& x, int n, const std::string& sched) {
    return dumps(demyanov_deriv(resolve_function(func, dim), x, n, schedule_from(sched)));
  }, py::arg("func"), py::arg("dim"), py::arg("x"), py::arg("n"), py::arg("schedule"));

  m.def("zero_in_subdiff", [](const std::string& func, int dim, const Point& x, int n, const std::string& sched,
                              int samples) {
    return dumps(zero_in_subdiff(resolve_function(func, dim), x, n, schedule_from(sched), samples));
  }, py::arg("func"), py::arg("dim"), py::arg("x"), py::arg("n"), py::arg("schedule"), py::arg("sphere_samples"));

  m.def("subdiff_interval_1d", [](const std::string& func, const Point& x, int n, const std::string& sched) {
    return dumps(subdiff_interval_1d(resolve_function(func, 1), x, n, schedule_from(sched)));
  }, py::arg("func"), py::arg("x"), py::arg("n"), py::arg("schedule"));

  m.def("analyze_point", [](const std::string& func, int dim, const Point& x, int max_n, const std::string& sched,
                            int samples) {
    return dumps(analyze_point(resolve_function(func, dim), x, max_n, schedule_from(sched), samples));
  }, py::arg("func"), py::arg("dim"), py::arg("x"), py::arg("max_n"), py::arg("schedule"),
     py::arg("sphere_samples"));

  m.def("condition_table", [](const std::string& func, int dim, const Point& x, int max_n, const std::string& sched,
                              int samples) {
    return dumps(condition_table(resolve_function(func, dim), x, max_n, schedule_from(sched), samples));
  }, py::arg("func"), py::arg("dim"), py::arg("x"), py::arg("max_n"), py::arg("schedule"),
     py::arg("sphere_samples"));

  m.def("check_invex_order", [](const std::string& func, int dim, int n, const std::string& box, int grid,
                                const std::string& sched, int samples) {
    const InvexBox b = parse_box(box);
    const FunctionSpec f = resolve_function(func, dim);
    return dumps(check_invex_order(f, n, b, grid, schedule_from(sched), samples));
  }, py::arg("func"), py::arg("dim"), py::arg("n"), py::arg("box"), py::arg("grid"), py::arg("schedule"),
     py::arg("sphere_samples"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
