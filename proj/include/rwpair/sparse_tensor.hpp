#pragma once

#include "rwpair/permutation.hpp"
#include "rwpair/scalar.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace rwpair {

using MultiIndex = std::vector<int>;

/// Sparse multi-dimensional array of exact scalars. Zero entries are never
/// stored. A rank-0 tensor holds a single scalar under the empty index.
class SparseTensor {
 public:
  using Entries = std::map<MultiIndex, Scalar>;

  SparseTensor() = default;
  explicit SparseTensor(std::vector<int> shape);

  static SparseTensor scalar(const Scalar& value);
  /// Kronecker delta on a square rank-2 shape.
  static SparseTensor delta(int dim);

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  std::size_t dense_size() const;
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const Entries& entries() const { return entries_; }

  Scalar at(const MultiIndex& index) const;
  void set(const MultiIndex& index, const Scalar& value);
  void add(const MultiIndex& index, const Scalar& value);

  /// Value of a rank-0 tensor.
  Scalar value() const;

  SparseTensor& operator+=(const SparseTensor& other);
  SparseTensor& operator-=(const SparseTensor& other);
  SparseTensor& operator*=(const Scalar& factor);
  friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
  friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
  friend SparseTensor operator*(SparseTensor a, const Scalar& f) { return a *= f; }
  friend SparseTensor operator*(const Scalar& f, SparseTensor a) { return a *= f; }
  SparseTensor operator-() const;

  bool operator==(const SparseTensor& other) const;

 private:
  void check_index(const MultiIndex& index) const;

  std::vector<int> shape_;
  Entries entries_;
};

/// Permutes tensor slots: output position p carries input slot sigma(p), so
/// the output entry at (i_{sigma(1)}, ..., i_{sigma(n)}) equals the input
/// entry at (i_1, ..., i_n). Axes exchanged by sigma must have equal
/// dimensions.
SparseTensor tau_apply(const Permutation& sigma, const SparseTensor& t);
/// Same slot movement without the dimension check; the shape is permuted too.
SparseTensor permute_axes(const Permutation& sigma, const SparseTensor& t);

/// Contracts axes1[r] of t1 against axes2[r] of t2. Result axes are the free
/// axes of t1 followed by the free axes of t2, each in original order.
SparseTensor contract(const SparseTensor& t1, std::span<const int> axes1,
                      const SparseTensor& t2, std::span<const int> axes2);

/// Traces axis pairs (first[r], second[r]) of a single tensor.
SparseTensor trace_axes(const SparseTensor& t, std::span<const int> first,
                        std::span<const int> second);

SparseTensor outer(const SparseTensor& a, const SparseTensor& b);

/// True when tau_sigma(t) == t.
bool is_symmetric_under(const SparseTensor& t, const Permutation& sigma);

/// Row-major flat offset of a multi-index.
std::size_t flat_offset(std::span<const int> shape, std::span<const int> index);
MultiIndex unflatten(std::span<const int> shape, std::size_t offset);

}  // namespace rwpair
