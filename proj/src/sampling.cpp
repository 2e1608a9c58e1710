#include "hodd/sampling.hpp"

#include <cmath>
#include <random>

#include "hodd/errors.hpp"
#include "hodd/numeric.hpp"

namespace hodd {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::uint64_t kSphereStream = 0x9e3779b97f4a7c15ULL;

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double radical_inverse(std::uint64_t index, int base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
    f /= base;
  }
  return result;
}

HaltonSequence::HaltonSequence(int dim, std::uint64_t seed) {
  if (dim < 1 || dim > static_cast<int>(std::size(kPrimes)))
    throw CapacityError("Halton sequence dimension must lie in [1, 12]");
  std::mt19937_64 rng(seed);
  shift_.resize(static_cast<std::size_t>(dim));
  for (double& s : shift_) s = unit_double(rng);
}

Point HaltonSequence::at(std::uint64_t k) const {
  Point p(shift_.size());
  for (std::size_t i = 0; i < shift_.size(); ++i) {
    double v = radical_inverse(k + 1, kPrimes[i]) + shift_[i];
    if (v >= 1.0) v -= 1.0;
    p[i] = v;
  }
  return p;
}

std::vector<Point> ball_offsets(int dim, int count, std::uint64_t seed) {
  if (count < 0) throw DomainError("sample count must be >= 0");
  if (dim == 1) {
    std::vector<Point> out;
    if (count >= 1) out.push_back({1.0});
    if (count >= 2) out.push_back({-1.0});
    return out;
  }
  HaltonSequence h(dim, seed);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t k = 0; static_cast<int>(out.size()) < count; ++k) {
    Point p = h.at(k);
    for (double& c : p) c = 2.0 * c - 1.0;
    const double r = norm2(p);
    if (r <= 1.0 && r > 0.0) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Point> sphere_directions(int dim, int count, std::uint64_t seed) {
  if (count < 1) throw DomainError("sphere sample count must be >= 1");
  if (dim == 1) return {{1.0}, {-1.0}};
  std::vector<Point> out;
  for (int i = 0; i < dim && static_cast<int>(out.size()) < count; ++i) {
    Point e(static_cast<std::size_t>(dim), 0.0);
    e[static_cast<std::size_t>(i)] = 1.0;
    out.push_back(e);
    if (static_cast<int>(out.size()) < count) {
      e[static_cast<std::size_t>(i)] = -1.0;
      out.push_back(e);
    }
  }
  HaltonSequence h(dim, seed ^ kSphereStream);
  for (std::uint64_t k = 0; static_cast<int>(out.size()) < count; ++k) {
    Point p = h.at(k);
    for (double& c : p) c = 2.0 * c - 1.0;
    const double r = norm2(p);
    if (r > 1.0 || r < 1e-3) continue;
    for (double& c : p) c /= r;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hodd
