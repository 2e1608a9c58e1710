#pragma once

#include <algorithm>
#include <cmath>
#include <span>

namespace hodd {

// x^k for k ≥ 0 by left-to-right repeated multiplication. The corpus
// evaluators and the expression DSL both use this so that the two routes
// agree bit for bit.
inline double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

inline double norm_inf(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s = std::max(s, std::abs(c));
  return s;
}

}  // namespace hodd
