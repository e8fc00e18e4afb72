#include "rwpair/sparse_tensor.hpp"

#include <stdexcept>
#include <unordered_map>

namespace rwpair {

namespace {

struct IndexHash {
  std::size_t operator()(const MultiIndex& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e37);
    return h;
  }
};

}  // namespace

SparseTensor::SparseTensor(std::vector<int> shape) : shape_(std::move(shape)) {
  for (int d : shape_)
    if (d < 0) throw std::invalid_argument("negative axis dimension");
}

SparseTensor SparseTensor::scalar(const Scalar& value) {
  SparseTensor t{std::vector<int>{}};
  t.set({}, value);
  return t;
}

SparseTensor SparseTensor::delta(int dim) {
  SparseTensor t({dim, dim});
  for (int i = 0; i < dim; ++i) t.set({i, i}, 1);
  return t;
}

std::size_t SparseTensor::dense_size() const {
  std::size_t n = 1;
  for (int d : shape_) n *= static_cast<std::size_t>(d);
  return n;
}

void SparseTensor::check_index(const MultiIndex& index) const {
  if (index.size() != shape_.size()) throw std::out_of_range("tensor index rank mismatch");
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] < 0 || index[i] >= shape_[i]) throw std::out_of_range("tensor index out of range");
}

Scalar SparseTensor::at(const MultiIndex& index) const {
  check_index(index);
  auto it = entries_.find(index);
  return it == entries_.end() ? Scalar(0) : it->second;
}

void SparseTensor::set(const MultiIndex& index, const Scalar& value) {
  check_index(index);
  if (rwpair::is_zero(value))
    entries_.erase(index);
  else
    entries_[index] = value;
}

void SparseTensor::add(const MultiIndex& index, const Scalar& value) {
  if (rwpair::is_zero(value)) return;
  check_index(index);
  auto [it, inserted] = entries_.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (rwpair::is_zero(it->second)) entries_.erase(it);
  }
}

Scalar SparseTensor::value() const {
  if (!shape_.empty()) throw std::logic_error("value() on a tensor of positive rank");
  auto it = entries_.find({});
  return it == entries_.end() ? Scalar(0) : it->second;
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& other) {
  if (other.shape_ != shape_) throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [k, v] : other.entries_) add(k, v);
  return *this;
}

SparseTensor& SparseTensor::operator-=(const SparseTensor& other) {
  if (other.shape_ != shape_) throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [k, v] : other.entries_) add(k, -v);
  return *this;
}

SparseTensor& SparseTensor::operator*=(const Scalar& factor) {
  if (rwpair::is_zero(factor)) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= factor;
  return *this;
}

SparseTensor SparseTensor::operator-() const {
  SparseTensor t = *this;
  for (auto& [k, v] : t.entries_) v = -v;
  return t;
}

bool SparseTensor::operator==(const SparseTensor& other) const {
  return shape_ == other.shape_ && entries_ == other.entries_;
}

SparseTensor permute_axes(const Permutation& sigma, const SparseTensor& t) {
  const int n = t.rank();
  if (sigma.size() != n) throw std::invalid_argument("permutation size != tensor rank");
  std::vector<int> shape(n);
  for (int p = 0; p < n; ++p) shape[p] = t.shape()[sigma(p)];
  SparseTensor out(shape);
  MultiIndex idx(n);
  for (const auto& [k, v] : t.entries()) {
    for (int p = 0; p < n; ++p) idx[p] = k[sigma(p)];
    out.set(idx, v);
  }
  return out;
}

SparseTensor tau_apply(const Permutation& sigma, const SparseTensor& t) {
  if (sigma.size() != t.rank()) throw std::invalid_argument("tau_apply: permutation size != tensor rank");
  for (int p = 0; p < t.rank(); ++p)
    if (t.shape()[sigma(p)] != t.shape()[p]) throw std::invalid_argument("tau_apply: permuted axes differ in dimension");
  return permute_axes(sigma, t);
}

SparseTensor contract(const SparseTensor& t1, std::span<const int> axes1,
                      const SparseTensor& t2, std::span<const int> axes2) {
  if (axes1.size() != axes2.size()) throw std::invalid_argument("contract: axis count mismatch");
  std::vector<bool> paired1(t1.rank(), false), paired2(t2.rank(), false);
  for (std::size_t r = 0; r < axes1.size(); ++r) {
    const int a = axes1[r], b = axes2[r];
    if (a < 0 || a >= t1.rank() || b < 0 || b >= t2.rank() || paired1[a] || paired2[b])
      throw std::invalid_argument("contract: bad axis");
    if (t1.shape()[a] != t2.shape()[b]) throw std::invalid_argument("contract: dimension mismatch");
    paired1[a] = paired2[b] = true;
  }
  std::vector<int> free1, free2, shape;
  for (int a = 0; a < t1.rank(); ++a)
    if (!paired1[a]) {
      free1.push_back(a);
      shape.push_back(t1.shape()[a]);
    }
  for (int b = 0; b < t2.rank(); ++b)
    if (!paired2[b]) {
      free2.push_back(b);
      shape.push_back(t2.shape()[b]);
    }

  // Bucket t2 by its contracted index.
  std::unordered_map<MultiIndex, std::vector<std::pair<MultiIndex, const Scalar*>>, IndexHash> buckets;
  MultiIndex key(axes2.size());
  for (const auto& [k, v] : t2.entries()) {
    for (std::size_t r = 0; r < axes2.size(); ++r) key[r] = k[axes2[r]];
    MultiIndex rest(free2.size());
    for (std::size_t r = 0; r < free2.size(); ++r) rest[r] = k[free2[r]];
    buckets[key].emplace_back(std::move(rest), &v);
  }

  SparseTensor out(shape);
  MultiIndex idx(shape.size());
  for (const auto& [k, v] : t1.entries()) {
    for (std::size_t r = 0; r < axes1.size(); ++r) key[r] = k[axes1[r]];
    auto it = buckets.find(key);
    if (it == buckets.end()) continue;
    for (std::size_t r = 0; r < free1.size(); ++r) idx[r] = k[free1[r]];
    for (const auto& [rest, w] : it->second) {
      std::copy(rest.begin(), rest.end(), idx.begin() + static_cast<long>(free1.size()));
      out.add(idx, v * *w);
    }
  }
  return out;
}

SparseTensor trace_axes(const SparseTensor& t, std::span<const int> first,
                        std::span<const int> second) {
  if (first.size() != second.size()) throw std::invalid_argument("trace: axis count mismatch");
  std::vector<bool> used(t.rank(), false);
  for (std::size_t r = 0; r < first.size(); ++r) {
    const int a = first[r], b = second[r];
    if (a < 0 || b < 0 || a >= t.rank() || b >= t.rank() || a == b || used[a] || used[b])
      throw std::invalid_argument("trace: bad axis");
    if (t.shape()[a] != t.shape()[b]) throw std::invalid_argument("trace: dimension mismatch");
    used[a] = used[b] = true;
  }
  std::vector<int> free, shape;
  for (int a = 0; a < t.rank(); ++a)
    if (!used[a]) {
      free.push_back(a);
      shape.push_back(t.shape()[a]);
    }
  SparseTensor out(shape);
  MultiIndex idx(free.size());
  for (const auto& [k, v] : t.entries()) {
    bool diag = true;
    for (std::size_t r = 0; r < first.size() && diag; ++r) diag = k[first[r]] == k[second[r]];
    if (!diag) continue;
    for (std::size_t r = 0; r < free.size(); ++r) idx[r] = k[free[r]];
    out.add(idx, v);
  }
  return out;
}

SparseTensor outer(const SparseTensor& a, const SparseTensor& b) {
  return contract(a, {}, b, {});
}

bool is_symmetric_under(const SparseTensor& t, const Permutation& sigma) {
  return tau_apply(sigma, t) == t;
}

std::size_t flat_offset(std::span<const int> shape, std::span<const int> index) {
  std::size_t off = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) off = off * shape[i] + index[i];
  return off;
}

MultiIndex unflatten(std::span<const int> shape, std::size_t offset) {
  MultiIndex idx(shape.size());
  for (std::size_t i = shape.size(); i-- > 0;) {
    idx[i] = static_cast<int>(offset % shape[i]);
    offset /= shape[i];
  }
  return idx;
}

}  // namespace rwpair
