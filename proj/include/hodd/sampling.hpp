#pragma once

#include <cstdint>
#include <vector>

#include "hodd/function_spec.hpp"

namespace hodd {

// Radical inverse of index in the given base.
double radical_inverse(std::uint64_t index, int base);

// Halton sequence in [0,1)^dim with a Cranley–Patterson shift drawn from seed.
// Point k of a longer request equals point k of a shorter one.
class HaltonSequence {
 public:
  HaltonSequence(int dim, std::uint64_t seed);
  Point at(std::uint64_t k) const;
  int dim() const { return static_cast<int>(shift_.size()); }

 private:
  std::vector<double> shift_;
};

// count offsets in the closed unit ball, excluding the centre. d=1 yields the
// radius endpoints {+1, -1}; d>=2 uses Halton points in the cube kept when
// inside the ball, so a longer list extends a shorter one.
std::vector<Point> ball_offsets(int dim, int count, std::uint64_t seed);

// count unit directions. d=1 yields exactly {+1, -1}; d>=2 starts with the
// axis directions ±e_i and continues with normalized ball points.
std::vector<Point> sphere_directions(int dim, int count, std::uint64_t seed);

}  // namespace hodd
