#include <gtest/gtest.h>

#include "hodd/corpus.hpp"
#include "hodd/errors.hpp"
#include "hodd/invex.hpp"

using namespace hodd;

namespace {

const LiminfSchedule kSched{};
const InvexBox kSquare{{-2, -2}, {2, 2}};
const InvexBox kLine{{-2}, {2}};

}  // namespace

TEST(Invex, NegSphere) {
  const CorpusEntry& e = corpus_lookup("neg-sphere");
  const InvexResult r2 = check_invex_order(e, 2, kSquare, 41, kSched);
  EXPECT_EQ(r2.result.verdict, Verdict::holds);
  EXPECT_TRUE(r2.candidates.empty());
  const InvexResult r1 = check_invex_order(e, 1, kSquare, 41, kSched);
  EXPECT_EQ(r1.result.verdict, Verdict::fails);
  ASSERT_TRUE(r1.result.witness);
  EXPECT_NEAR((*r1.result.witness)[0], 0.0, 1e-12);
  EXPECT_NEAR((*r1.result.witness)[1], 0.0, 1e-12);
}

TEST(Invex, NpcFailsBelowOrder) {
  const InvexResult r = check_invex_order(corpus_lookup("npc-4"), 3, kLine, 81, kSched);
  EXPECT_EQ(r.result.verdict, Verdict::fails);
  ASSERT_TRUE(r.result.witness);
  EXPECT_NEAR((*r.result.witness)[0], 0.0, 1e-12);
}

TEST(Invex, NpcLadder) {
  for (int n : {3, 4, 5}) {
    const CorpusEntry& e = corpus_lookup("npc-" + std::to_string(n));
    EXPECT_EQ(check_invex_order(e, n - 1, kLine, 41, kSched).result.verdict, Verdict::fails) << n;
    EXPECT_EQ(check_invex_order(e, n, kLine, 41, kSched).result.verdict, Verdict::holds) << n;
  }
}

TEST(Invex, OrderMonotone) {
  for (const char* name : {"neg-sphere", "npc-4", "sq-norm", "quartic-1d"}) {
    const CorpusEntry& e = corpus_lookup(name);
    const InvexBox& box = e.spec.dim() == 1 ? kLine : kSquare;
    bool held = false;
    for (int n = 1; n <= 4; ++n) {
      const Verdict v = check_invex_order(e, n, box, 21, kSched).result.verdict;
      if (held) EXPECT_EQ(v, Verdict::holds) << name << " n=" << n;
      held = held || v == Verdict::holds;
    }
  }
}

TEST(Invex, Errors) {
  const CorpusEntry& e = corpus_lookup("sq-norm");
  EXPECT_THROW(check_invex_order(e, 1, kSquare, 1, kSched), DomainError);
  EXPECT_THROW(check_invex_order(e, 1, InvexBox{{0, -1}, {0, 1}}, 5, kSched), DomainError);
  EXPECT_THROW(check_invex_order(e, 1, kLine, 5, kSched), DomainError);
  EXPECT_THROW(parse_box("0,1,2"), DomainError);
}

TEST(Invex, GridAndBox) {
  EXPECT_EQ(parse_box("-1,1,0,2"), (InvexBox{{-1, 0}, {1, 2}}));
  const auto pts = grid_points(InvexBox{{-1, 0}, {1, 2}}, 3);
  ASSERT_EQ(pts.size(), 9u);
  EXPECT_EQ(pts.front(), (Point{-1, 0}));
  EXPECT_EQ(pts.back(), (Point{1, 2}));
}

TEST(Invex, EvidenceJson) {
  const InvexResult r = check_invex_order(corpus_lookup("neg-sphere"), 1, kSquare, 21, kSched);
  const nlohmann::json j = r;
  EXPECT_EQ(j.at("verdict").at("verdict"), "fails");
  EXPECT_EQ(j.at("reference_source"), "label");
  ASSERT_FALSE(j.at("candidates").empty());
  const auto& c = j.at("candidates").at(0);
  for (const char* key : {"point", "stationary_order", "f", "verdict"}) EXPECT_TRUE(c.contains(key)) << key;
}
