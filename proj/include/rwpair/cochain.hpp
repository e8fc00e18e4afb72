#pragma once

#include "rwpair/sparse_tensor.hpp"

#include <map>
#include <vector>

namespace rwpair {

/// Strictly increasing tuple of basis indices of h.
using FormIndex = std::vector<int>;

/// A k-form on h (of dimension dim_h) with values in a tensor space of the
/// given shape. Only strictly increasing index tuples are stored and zero
/// components are dropped.
class CochainForm {
 public:
  using Components = std::map<FormIndex, SparseTensor>;

  CochainForm() = default;
  CochainForm(int dim_h, int degree, std::vector<int> value_shape);

  int dim_h() const { return dim_h_; }
  int degree() const { return degree_; }
  const std::vector<int>& value_shape() const { return value_shape_; }
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  /// Component at an increasing tuple (zero tensor when absent).
  SparseTensor at(const FormIndex& increasing) const;
  /// Value on an arbitrary tuple of basis indices: zero on repeats,
  /// otherwise the sorted component times the sorting sign.
  SparseTensor evaluate(std::vector<int> indices) const;

  void add(const FormIndex& increasing, const SparseTensor& value);
  /// Adds `coeff * value` to the value on an arbitrary tuple.
  void add_on(std::vector<int> indices, const SparseTensor& value, const Scalar& coeff);

  CochainForm& operator+=(const CochainForm& o);
  CochainForm& operator-=(const CochainForm& o);
  CochainForm& operator*=(const Scalar& f);
  friend CochainForm operator+(CochainForm a, const CochainForm& b) { return a += b; }
  friend CochainForm operator-(CochainForm a, const CochainForm& b) { return a -= b; }
  friend CochainForm operator*(const Scalar& f, CochainForm a) { return a *= f; }
  bool operator==(const CochainForm& o) const;

  /// Applies a slot permutation to every value (tau_sigma on the value part).
  CochainForm permute_values(const Permutation& sigma) const;
  /// Flattened coordinates in the basis (increasing tuple, flat value index),
  /// tuples in lexicographic order.
  std::vector<Scalar> to_vector() const;
  static CochainForm from_vector(int dim_h, int degree, std::vector<int> value_shape,
                                 const std::vector<Scalar>& coords);
  std::size_t value_dim() const;

 private:
  void check_compatible(const CochainForm& o) const;

  int dim_h_ = 0;
  int degree_ = 0;
  std::vector<int> value_shape_;
  Components components_;
};

/// All strictly increasing k-tuples from {0..n-1} in lexicographic order.
std::vector<FormIndex> increasing_tuples(int n, int k);

/// Shuffle product without factorial normalization:
/// (eta ^ mu)(a_1..a_{p+q}) = sum over (p,q)-shuffles s of
/// sign(s) eta(a_s(1)..a_s(p)) (x) mu(a_s(p+1)..a_s(p+q)).
/// Value slots of eta come first. Throws on mismatched dim_h.
CochainForm shuffle_wedge(const CochainForm& eta, const CochainForm& mu);

}  // namespace rwpair
