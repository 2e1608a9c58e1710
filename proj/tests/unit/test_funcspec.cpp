#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "hodd/corpus.hpp"
#include "hodd/errors.hpp"
#include "hodd/expr.hpp"
#include "hodd/function_spec.hpp"
#include "hodd/poly.hpp"
#include "hodd/sym_tensor.hpp"

using namespace hodd;

TEST(Evaluate, CorpusExamples) {
  EXPECT_EQ(evaluate(corpus_lookup("ex2").spec, Point{0.0}), ExtReal(0.0));
  EXPECT_EQ(evaluate(corpus_lookup("parabola-trap-4").spec, Point{1.0, 1.0}), ExtReal(-1.0));
  EXPECT_TRUE(evaluate(corpus_lookup("indicator-halfline").spec, Point{-1.0}).is_pos_inf());
}

TEST(Evaluate, RejectsBadInput) {
  const FunctionSpec& f = corpus_lookup("sq-norm").spec;
  EXPECT_THROW(f.evaluate(Point{1.0}), DomainError);
  EXPECT_THROW(f.evaluate(Point{1.0, std::nan("")}), DomainError);
}

TEST(Evaluate, RejectsNegativeInfinityFromEvaluator) {
  FunctionSpec f(1, [](std::span<const double>) { return ExtReal::neg_inf(); });
  EXPECT_THROW(f.evaluate(Point{0.0}), DomainError);
}

TEST(ParseFunction, Examples) {
  const FunctionSpec trap = parse_function("piecewise(x2 == x1^2, -(x2^4), 0)", 2);
  EXPECT_EQ(trap.evaluate(Point{1.0, 1.0}), ExtReal(-1.0));
  EXPECT_EQ(trap.evaluate(Point{1.0, 0.0}), ExtReal(0.0));
  EXPECT_EQ(parse_function("x1^2 + x2^2", 2).evaluate(Point{3.0, 4.0}), ExtReal(25.0));
  try {
    parse_function("x1 +* 2", 1);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(ParseFunction, Errors) {
  EXPECT_THROW(parse_function("y1 + 1", 1), ParseError);
  EXPECT_THROW(parse_function("x3", 2), ParseError);
  EXPECT_THROW(parse_function("inf + x1", 1), ParseError);
  EXPECT_THROW(parse_function("", 1), ParseError);
  EXPECT_THROW(parse_function("x1^0.5", 1), ParseError);
  EXPECT_THROW(parse_function("(x1", 1), ParseError);
}

TEST(ParseFunction, EvaluationErrors) {
  EXPECT_THROW(parse_function("1/x1", 1).evaluate(Point{0.0}), EvalError);
  EXPECT_THROW(parse_function("exp(x1)", 1).evaluate(Point{1000.0}), EvalError);
  EXPECT_THROW(parse_function("sqrt(x1)", 1).evaluate(Point{-1.0}), EvalError);
}

TEST(ParseFunction, OperatorsAndFunctions) {
  const Point p{2.0, -3.0};
  auto ev = [&](const char* s) { return parse_function(s, 2).evaluate(p).value(); };
  EXPECT_DOUBLE_EQ(ev("x1 - x2 * 2"), 8.0);
  EXPECT_DOUBLE_EQ(ev("-x1^2"), -4.0);
  EXPECT_DOUBLE_EQ(ev("x2 / x1"), -1.5);
  EXPECT_DOUBLE_EQ(ev("abs(x2) + min(x1, x2) + max(x1, x2)"), 2.0);
  EXPECT_DOUBLE_EQ(ev("sqrt(x1 * 8)"), 4.0);
  EXPECT_DOUBLE_EQ(ev("exp(0)"), 1.0);
  EXPECT_DOUBLE_EQ(ev("piecewise(x1 > 0 && x2 < 0, 1, 2)"), 1.0);
  EXPECT_DOUBLE_EQ(ev("piecewise(x1 < 0 || x2 >= 0, 1, 2)"), 2.0);
  EXPECT_DOUBLE_EQ(ev("piecewise(x1 != 2, 1, 2)"), 2.0);
  EXPECT_DOUBLE_EQ(ev("piecewise(x1 <= 2, 1.5e1, 2)"), 15.0);
  EXPECT_TRUE(parse_function("piecewise(x1 >= 0, 0, inf)", 1).evaluate(Point{-1.0}).is_pos_inf());
}

TEST(Corpus, RequiredEntriesAndUniqueNames) {
  std::set<std::string> names;
  for (const CorpusEntry& e : corpus()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_TRUE(e.spec.labels.has_value()) << e.name;
    EXPECT_FALSE(e.provenance.empty());
  }
  for (const char* n : {"ex2", "npc-2", "npc-3", "npc-4", "npc-5", "exp-2d", "parabola-trap-4", "neg-sphere",
                        "sq-norm", "abs-1d", "quartic-1d", "mixed-24", "linear-c", "indicator-halfline"})
    EXPECT_TRUE(names.count(n)) << n;
}

TEST(Corpus, LookupExamples) {
  const CorpusEntry& ex2 = corpus_lookup("ex2");
  EXPECT_EQ(ex2.spec.dim(), 1);
  EXPECT_TRUE(ex2.spec.labels->global_maximizer);
  EXPECT_TRUE(ex2.spec.labels->stationary_all_orders);
  const CorpusEntry& ns = corpus_lookup("neg-sphere");
  EXPECT_FALSE(ns.spec.labels->invex.at(1));
  EXPECT_TRUE(ns.spec.labels->invex.at(2));
  try {
    corpus_lookup("unknown-fn");
    FAIL() << "expected an error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("sq-norm"), std::string::npos);
  }
}

TEST(Corpus, ListingFormat) {
  const std::string listing = corpus_listing();
  int lines = 0;
  std::size_t start = 0;
  while (start < listing.size()) {
    const std::size_t end = listing.find('\n', start);
    const std::string line = listing.substr(start, end - start);
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 2) << line;
    ++lines;
    start = end + 1;
  }
  EXPECT_EQ(lines, static_cast<int>(corpus().size()));
}

TEST(Corpus, CheckpointsAgreeWithEvaluator) {
  for (const CorpusEntry& e : corpus()) {
    const auto& cps = e.spec.labels->checkpoints;
    EXPECT_EQ(cps.size(), 10u) << e.name;
    for (const auto& [p, want] : cps) {
      const ExtReal got = e.spec.evaluate(p);
      if (!want.is_finite()) {
        EXPECT_EQ(got, want) << e.name;
      } else {
        ASSERT_TRUE(got.is_finite()) << e.name;
        EXPECT_NEAR(got.value(), want.value(), 1e-12 * (1 + std::abs(want.value()))) << e.name;
      }
    }
  }
}

// The DSL text of each entry evaluates exactly like its hand-written evaluator.
TEST(Corpus, SourceRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (const CorpusEntry& e : corpus()) {
    ASSERT_TRUE(e.spec.source.has_value()) << e.name;
    const FunctionSpec parsed = parse_function(*e.spec.source, e.spec.dim());
    for (int k = 0; k < 100; ++k) {
      Point p(static_cast<std::size_t>(e.spec.dim()));
      for (double& v : p) v = dist(rng);
      // Half of the 2-D samples sit on the parabola x2 = x1^2.
      if (p.size() == 2 && k % 2 == 0) p[1] = p[0] * p[0];
      EXPECT_EQ(parsed.evaluate(p), e.spec.evaluate(p)) << e.name;
    }
  }
}

TEST(ExactFrechet, Examples) {
  const PolyTensorData sq(2, {{1.0, {2, 0}}, {1.0, {0, 2}}});
  EXPECT_DOUBLE_EQ(exact_frechet(sq, 2, Point{0.3, -0.7}, Point{1.0, 1.0}).value(), 4.0);
  EXPECT_DOUBLE_EQ(exact_frechet(sq, 1, Point{1.0, 0.0}, Point{0.0, 1.0}).value(), 0.0);
  const PolyTensorData q(1, {{1.0, {4}}});
  EXPECT_DOUBLE_EQ(exact_frechet(q, 4, Point{0.0}, Point{1.0}).value(), 24.0);
  EXPECT_THROW(exact_frechet(q, 5, Point{0.0}, Point{1.0}), CapacityError);
}

TEST(ExactFrechet, Homogeneity) {
  const PolyTensorData p(2, {{1.5, {3, 1}}, {-2.0, {0, 2}}, {0.5, {1, 0}}});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const Point x{dist(rng), dist(rng)};
    const Point u{dist(rng), dist(rng)};
    for (int m = 1; m <= 4; ++m)
      for (double tau : {0.5, 2.0, 3.0}) {
        const Point tu{tau * u[0], tau * u[1]};
        const double a = exact_frechet(p, m, x, tu).value();
        const double b = std::pow(tau, m) * exact_frechet(p, m, x, u).value();
        EXPECT_NEAR(a, b, 1e-12 * (1 + std::abs(b)));
      }
  }
}

TEST(ExactFrechet, TensorMatchesPartials) {
  // f = x1^2 x2 + x2^3: ∂²f/∂x1∂x2 = 2 x1, ∂³f/∂x2³ = 6.
  const PolyTensorData p(2, {{1.0, {2, 1}}, {1.0, {0, 3}}});
  const Point x{0.5, -1.0};
  const SymTensor h = p.tensor(2, x);
  EXPECT_DOUBLE_EQ(h.entry(std::vector<int>{0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(h.entry(std::vector<int>{1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(p.tensor(3, x).entry(std::vector<int>{1, 1, 1}), 6.0);
}

TEST(SymTensor, SymmetryAndHomogeneity) {
  const SymTensor t = SymTensor::from_entries(3, 3, [](std::span<const int> idx) {
    return 1.0 + idx[0] + 2.0 * idx[1] + 4.0 * idx[2];
  });
  EXPECT_DOUBLE_EQ(t.entry(std::vector<int>{0, 1, 2}), t.entry(std::vector<int>{2, 0, 1}));
  const Point u{0.3, -0.2, 0.9};
  for (double tau : {0.5, 2.0}) {
    const Point tu{tau * u[0], tau * u[1], tau * u[2]};
    EXPECT_NEAR(t.apply(tu), std::pow(tau, 3) * t.apply(u), 1e-12);
  }
  EXPECT_DOUBLE_EQ(SymTensor::identity_form(2, 3.0).apply(Point{1.0, 2.0}), 15.0);
  EXPECT_THROW(SymTensor::from_entries(5, 2, [](std::span<const int>) { return 0.0; }), CapacityError);
  EXPECT_THROW(SymTensor::from_entries(2, 7, [](std::span<const int>) { return 0.0; }), CapacityError);
}

TEST(MultiplierChain, OrderFromLength) {
  EXPECT_EQ(MultiplierChain::zero(1, 2).order(), 1);
  EXPECT_EQ(MultiplierChain::zero(5, 2).order(), 5);
  EXPECT_TRUE(MultiplierChain::zero(5, 2).is_zero());
  EXPECT_THROW(MultiplierChain(2, {SymTensor::zero(2, 2)}), DomainError);
}
