#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "hodd/errors.hpp"
#include "hodd/extreal.hpp"

using hodd::ExtReal;

TEST(ExtReal, TotalOrder) {
  EXPECT_LT(ExtReal::neg_inf(), ExtReal(-1e300));
  EXPECT_LT(ExtReal(1e300), ExtReal::pos_inf());
  EXPECT_LT(ExtReal(-1.0), ExtReal(2.0));
  EXPECT_EQ(ExtReal::pos_inf(), ExtReal::pos_inf());
  EXPECT_NE(ExtReal::pos_inf(), ExtReal::neg_inf());
}

TEST(ExtReal, ConstructionFromInfinityAndNaN) {
  EXPECT_TRUE(ExtReal(std::numeric_limits<double>::infinity()).is_pos_inf());
  EXPECT_TRUE(ExtReal(-std::numeric_limits<double>::infinity()).is_neg_inf());
  EXPECT_THROW(ExtReal(std::nan("")), hodd::DomainError);
  EXPECT_THROW(ExtReal::function_value(-std::numeric_limits<double>::infinity()), hodd::DomainError);
  EXPECT_TRUE(ExtReal::function_value(std::numeric_limits<double>::infinity()).is_pos_inf());
}

TEST(ExtReal, Addition) {
  EXPECT_EQ(ExtReal(1.5) + ExtReal(2.0), ExtReal(3.5));
  EXPECT_TRUE((ExtReal(3.0) + ExtReal::pos_inf()).is_pos_inf());
  EXPECT_TRUE((ExtReal::neg_inf() + ExtReal(3.0)).is_neg_inf());
  EXPECT_THROW(ExtReal::pos_inf() + ExtReal::neg_inf(), hodd::ArithmeticError);
  EXPECT_TRUE((-ExtReal::pos_inf()).is_neg_inf());
  EXPECT_THROW(ExtReal::pos_inf().value(), hodd::ArithmeticError);
}

TEST(ExtMin, Examples) {
  const std::vector<ExtReal> a{3.0, ExtReal::pos_inf(), -1.5};
  EXPECT_EQ(hodd::ext_min(a), ExtReal(-1.5));
  const std::vector<ExtReal> b{ExtReal::pos_inf(), ExtReal::pos_inf()};
  EXPECT_TRUE(hodd::ext_min(b).is_pos_inf());
  const std::vector<ExtReal> c{0.0};
  EXPECT_EQ(hodd::ext_min(c), ExtReal(0.0));
  EXPECT_THROW(hodd::ext_min(std::vector<ExtReal>{}), hodd::DomainError);
}

TEST(ExtMin, PermutationAndSupersetProperties) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ExtReal> s;
    for (int i = 0; i < 6; ++i) {
      const int pick = static_cast<int>(rng() % 8);
      s.push_back(pick == 0 ? ExtReal::pos_inf() : pick == 1 ? ExtReal::neg_inf() : ExtReal(dist(rng)));
    }
    const ExtReal m = hodd::ext_min(s);
    std::vector<ExtReal> shuffled = s;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(hodd::ext_min(shuffled), m);
    std::vector<ExtReal> doubled = s;
    doubled.insert(doubled.end(), s.begin(), s.end());
    EXPECT_EQ(hodd::ext_min(doubled), m);
    std::vector<ExtReal> superset = s;
    superset.push_back(ExtReal(dist(rng)));
    EXPECT_LE(hodd::ext_min(superset), m);
  }
}

TEST(ExtAffineCombine, Examples) {
  EXPECT_EQ(hodd::ext_affine_combine(2.0, 3.0, -1.0), ExtReal(5.0));
  EXPECT_TRUE(hodd::ext_affine_combine(ExtReal::pos_inf(), 2.0, -7.0).is_pos_inf());
  EXPECT_THROW(hodd::ext_affine_combine(ExtReal::pos_inf(), 0.0, 1.0), hodd::ArithmeticError);
  EXPECT_TRUE(hodd::ext_affine_combine(ExtReal::pos_inf(), -1.0, 0.0).is_neg_inf());
}

TEST(ExtAffineCombine, MonotoneForPositiveScale) {
  const std::vector<ExtReal> ordered{ExtReal::neg_inf(), -3.0, 0.0, 0.5, 10.0, ExtReal::pos_inf()};
  for (double c : {0.1, 1.0, 7.0})
    for (std::size_t i = 1; i < ordered.size(); ++i)
      EXPECT_LE(hodd::ext_affine_combine(ordered[i - 1], c, 2.0),
                hodd::ext_affine_combine(ordered[i], c, 2.0));
}

TEST(ExtReal, JsonEncoding) {
  nlohmann::json j = ExtReal::pos_inf();
  EXPECT_EQ(j, "+inf");
  j = ExtReal::neg_inf();
  EXPECT_EQ(j, "-inf");
  j = ExtReal(2.5);
  EXPECT_EQ(j, 2.5);
  EXPECT_TRUE(nlohmann::json("+inf").get<ExtReal>().is_pos_inf());
  EXPECT_EQ(nlohmann::json(1.25).get<ExtReal>(), ExtReal(1.25));
  EXPECT_THROW(nlohmann::json("inf?").get<ExtReal>(), hodd::DomainError);
}
