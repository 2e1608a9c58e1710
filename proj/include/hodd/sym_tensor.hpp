#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hodd {

// Symmetric i-linear form on R^d, x_i* ∈ L^i(E).
//
// Storage holds one coefficient per non-decreasing index tuple
// (i1 ≤ i2 ≤ … ≤ i_order); symmetry under argument permutation therefore holds
// by construction. A tensor built with zero() carries no storage and is
// allowed at any order and dimension; stored tensors are capped at order
// kMaxOrder and dimension kMaxDim.
class SymTensor {
 public:
  static constexpr int kMaxOrder = 4;
  static constexpr int kMaxDim = 6;

  static SymTensor zero(int order, int dim);
  // entry(idx) returns T[idx[0]]…[idx[order-1]] for a sorted index tuple.
  static SymTensor from_entries(int order, int dim,
                                const std::function<double(std::span<const int>)>& entry);
  // scale·I as a quadratic form: apply(u) = scale·|u|².
  static SymTensor identity_form(int dim, double scale);

  int order() const { return order_; }
  int dim() const { return dim_; }
  bool is_zero() const { return coeffs_.empty(); }

  // order-fold contraction x*(u)(u)…(u).
  double apply(std::span<const double> u) const;

  // Entry at any (unsorted) index tuple.
  double entry(std::span<const int> idx) const;

  SymTensor scaled(double s) const;

 private:
  SymTensor(int order, int dim) : order_(order), dim_(dim) {}

  int order_ = 0;
  int dim_ = 0;
  std::vector<double> coeffs_;        // per sorted tuple
  std::vector<double> multiplicity_;  // order!/Π count_k!
  std::vector<std::vector<int>> tuples_;
};

// (x_1*, …, x_{n-1}*): tensors of orders exactly 1..n-1 entering Δ_n.
class MultiplierChain {
 public:
  MultiplierChain() = default;
  MultiplierChain(int dim, std::vector<SymTensor> tensors);

  static MultiplierChain zero(int order, int dim);

  // Derivative order n = len + 1.
  int order() const { return static_cast<int>(tensors_.size()) + 1; }
  int dim() const { return dim_; }
  bool is_zero() const;
  const std::vector<SymTensor>& tensors() const { return tensors_; }

 private:
  int dim_ = 0;
  std::vector<SymTensor> tensors_;
};

}  // namespace hodd
