#pragma once

#include <span>
#include <vector>

#include "hodd/extreal.hpp"
#include "hodd/sym_tensor.hpp"

namespace hodd {

struct Monomial {
  double coef = 0.0;
  std::vector<int> exponents;  // one per coordinate
};

// Polynomial coefficients that give exact Fréchet derivative tensors ∇^m f(x).
class PolyTensorData {
 public:
  PolyTensorData(int dim, std::vector<Monomial> monomials, int max_order = 4);

  int dim() const { return dim_; }
  int max_order() const { return max_order_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  double value(std::span<const double> x) const;

  // ∇^m f(x) applied m times to u: m!·[s^m] f(x + s·u), expanded exactly.
  double directional(int m, std::span<const double> x, std::span<const double> u) const;

  // Partial derivative ∂^m f / ∂x_{i1}…∂x_{im} at x.
  double partial(std::span<const int> idx, std::span<const double> x) const;

  SymTensor tensor(int m, std::span<const double> x) const;

  // (∇f(x), ∇²f(x), …, ∇^{n-1}f(x)).
  MultiplierChain frechet_chain(int n, std::span<const double> x) const;

 private:
  void check_order(int m) const;

  int dim_;
  std::vector<Monomial> monomials_;
  int max_order_;
};

// ∇^m f(x)(u)…(u); throws CapacityError when m exceeds data.max_order().
ExtReal exact_frechet(const PolyTensorData& data, int m, std::span<const double> x,
                      std::span<const double> u);

}  // namespace hodd
