#include "hodd/sym_tensor.hpp"

#include <algorithm>
#include <string>

#include "hodd/errors.hpp"
#include "hodd/numeric.hpp"

namespace hodd {

namespace {

void sorted_tuples(int order, int dim, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == order) {
    out.push_back(cur);
    return;
  }
  const int start = cur.empty() ? 0 : cur.back();
  for (int i = start; i < dim; ++i) {
    cur.push_back(i);
    sorted_tuples(order, dim, cur, out);
    cur.pop_back();
  }
}

double multiplicity(std::span<const int> tuple) {
  double m = factorial(static_cast<int>(tuple.size()));
  std::size_t i = 0;
  while (i < tuple.size()) {
    std::size_t j = i;
    while (j < tuple.size() && tuple[j] == tuple[i]) ++j;
    m /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return m;
}

}  // namespace

SymTensor SymTensor::zero(int order, int dim) {
  if (order < 1 || dim < 1) throw DomainError("tensor order and dimension must be positive");
  return SymTensor(order, dim);
}

SymTensor SymTensor::from_entries(int order, int dim,
                                  const std::function<double(std::span<const int>)>& entry) {
  if (order < 1 || dim < 1) throw DomainError("tensor order and dimension must be positive");
  if (order > kMaxOrder || dim > kMaxDim)
    throw CapacityError("symmetric tensor of order " + std::to_string(order) + " on R^" +
                        std::to_string(dim) + " exceeds capacity (order <= 4, dim <= 6)");
  SymTensor t(order, dim);
  std::vector<int> cur;
  sorted_tuples(order, dim, cur, t.tuples_);
  t.coeffs_.reserve(t.tuples_.size());
  t.multiplicity_.reserve(t.tuples_.size());
  for (const auto& tup : t.tuples_) {
    t.coeffs_.push_back(entry(tup));
    t.multiplicity_.push_back(multiplicity(tup));
  }
  return t;
}

SymTensor SymTensor::identity_form(int dim, double scale) {
  return from_entries(2, dim, [scale](std::span<const int> idx) {
    return idx[0] == idx[1] ? scale : 0.0;
  });
}

double SymTensor::apply(std::span<const double> u) const {
  if (static_cast<int>(u.size()) != dim_) throw DomainError("direction dimension mismatch");
  if (is_zero()) return 0.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < tuples_.size(); ++k) {
    double prod = coeffs_[k] * multiplicity_[k];
    for (int i : tuples_[k]) prod *= u[static_cast<std::size_t>(i)];
    sum += prod;
  }
  return sum;
}

double SymTensor::entry(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != order_) throw DomainError("index arity mismatch");
  if (is_zero()) return 0.0;
  std::vector<int> key(idx.begin(), idx.end());
  std::sort(key.begin(), key.end());
  const auto it = std::lower_bound(tuples_.begin(), tuples_.end(), key);
  if (it == tuples_.end() || *it != key) throw DomainError("index out of range");
  return coeffs_[static_cast<std::size_t>(it - tuples_.begin())];
}

SymTensor SymTensor::scaled(double s) const {
  SymTensor t = *this;
  for (double& c : t.coeffs_) c *= s;
  return t;
}

MultiplierChain::MultiplierChain(int dim, std::vector<SymTensor> tensors)
    : dim_(dim), tensors_(std::move(tensors)) {
  if (dim < 1) throw DomainError("chain dimension must be positive");
  for (std::size_t i = 0; i < tensors_.size(); ++i) {
    if (tensors_[i].order() != static_cast<int>(i) + 1)
      throw DomainError("multiplier chain tensor " + std::to_string(i + 1) + " has order " +
                        std::to_string(tensors_[i].order()));
    if (tensors_[i].dim() != dim) throw DomainError("multiplier chain dimension mismatch");
  }
}

MultiplierChain MultiplierChain::zero(int order, int dim) {
  if (order < 1) throw DomainError("derivative order must be >= 1");
  std::vector<SymTensor> ts;
  for (int i = 1; i < order; ++i) ts.push_back(SymTensor::zero(i, dim));
  return MultiplierChain(dim, std::move(ts));
}

bool MultiplierChain::is_zero() const {
  return std::all_of(tensors_.begin(), tensors_.end(),
                     [](const SymTensor& t) { return t.is_zero(); });
}

}  // namespace hodd
