#include "hodd/poly.hpp"

#include <string>

#include "hodd/errors.hpp"
#include "hodd/numeric.hpp"

namespace hodd {

namespace {

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void check_dim(int dim, std::span<const double> v) {
  if (static_cast<int>(v.size()) != dim) throw DomainError("dimension mismatch");
}

}  // namespace

PolyTensorData::PolyTensorData(int dim, std::vector<Monomial> monomials, int max_order)
    : dim_(dim), monomials_(std::move(monomials)), max_order_(max_order) {
  if (dim < 1) throw DomainError("polynomial dimension must be positive");
  for (const Monomial& m : monomials_) {
    if (static_cast<int>(m.exponents.size()) != dim)
      throw DomainError("monomial exponent count must equal dimension");
    for (int e : m.exponents)
      if (e < 0) throw DomainError("negative monomial exponent");
  }
}

void PolyTensorData::check_order(int m) const {
  if (m < 1) throw DomainError("derivative order must be >= 1");
  if (m > max_order_)
    throw CapacityError("order " + std::to_string(m) + " exceeds polynomial tensor cap " +
                        std::to_string(max_order_));
}

double PolyTensorData::value(std::span<const double> x) const {
  check_dim(dim_, x);
  double s = 0.0;
  for (const Monomial& mono : monomials_) {
    double p = mono.coef;
    for (int i = 0; i < dim_; ++i) p *= ipow(x[static_cast<std::size_t>(i)], mono.exponents[static_cast<std::size_t>(i)]);
    s += p;
  }
  return s;
}

double PolyTensorData::directional(int m, std::span<const double> x,
                                   std::span<const double> u) const {
  check_order(m);
  check_dim(dim_, x);
  check_dim(dim_, u);
  // Expand each monomial Π (x_i + s u_i)^{a_i} as a polynomial in s and keep
  // the s^m coefficient.
  double total = 0.0;
  for (const Monomial& mono : monomials_) {
    std::vector<double> poly{mono.coef};
    for (int i = 0; i < dim_; ++i) {
      const int a = mono.exponents[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      const double xi = x[static_cast<std::size_t>(i)];
      const double ui = u[static_cast<std::size_t>(i)];
      std::vector<double> factor(static_cast<std::size_t>(a) + 1);
      for (int k = 0; k <= a; ++k)
        factor[static_cast<std::size_t>(k)] = binomial(a, k) * ipow(xi, a - k) * ipow(ui, k);
      std::vector<double> next(poly.size() + factor.size() - 1, 0.0);
      for (std::size_t p = 0; p < poly.size(); ++p)
        for (std::size_t q = 0; q < factor.size(); ++q) next[p + q] += poly[p] * factor[q];
      poly = std::move(next);
    }
    if (static_cast<std::size_t>(m) < poly.size()) total += poly[static_cast<std::size_t>(m)];
  }
  return factorial(m) * total;
}

double PolyTensorData::partial(std::span<const int> idx, std::span<const double> x) const {
  check_dim(dim_, x);
  std::vector<int> counts(static_cast<std::size_t>(dim_), 0);
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw DomainError("partial derivative index out of range");
    ++counts[static_cast<std::size_t>(i)];
  }
  double s = 0.0;
  for (const Monomial& mono : monomials_) {
    double p = mono.coef;
    for (int i = 0; i < dim_ && p != 0.0; ++i) {
      const int a = mono.exponents[static_cast<std::size_t>(i)];
      const int c = counts[static_cast<std::size_t>(i)];
      if (c > a) {
        p = 0.0;
        break;
      }
      p *= factorial(a) / factorial(a - c) * ipow(x[static_cast<std::size_t>(i)], a - c);
    }
    s += p;
  }
  return s;
}

SymTensor PolyTensorData::tensor(int m, std::span<const double> x) const {
  check_order(m);
  return SymTensor::from_entries(m, dim_,
                                 [&](std::span<const int> idx) { return partial(idx, x); });
}

MultiplierChain PolyTensorData::frechet_chain(int n, std::span<const double> x) const {
  if (n < 1) throw DomainError("derivative order must be >= 1");
  std::vector<SymTensor> ts;
  for (int m = 1; m < n; ++m) ts.push_back(tensor(m, x));
  return MultiplierChain(dim_, std::move(ts));
}

ExtReal exact_frechet(const PolyTensorData& data, int m, std::span<const double> x,
                      std::span<const double> u) {
  return ExtReal(data.directional(m, x, u));
}

}  // namespace hodd
