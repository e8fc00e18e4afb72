#include "rwpair/cochain.hpp"

#include <stdexcept>

namespace rwpair {

CochainForm::CochainForm(int dim_h, int degree, std::vector<int> value_shape)
    : dim_h_(dim_h), degree_(degree), value_shape_(std::move(value_shape)) {
  if (dim_h < 0 || degree < 0) throw std::invalid_argument("negative form dimension or degree");
}

std::size_t CochainForm::value_dim() const {
  std::size_t n = 1;
  for (int d : value_shape_) n *= static_cast<std::size_t>(d);
  return n;
}

SparseTensor CochainForm::at(const FormIndex& increasing) const {
  auto it = components_.find(increasing);
  return it == components_.end() ? SparseTensor(value_shape_) : it->second;
}

SparseTensor CochainForm::evaluate(std::vector<int> indices) const {
  if (static_cast<int>(indices.size()) != degree_) throw std::invalid_argument("form evaluated on wrong arity");
  const int s = sort_sign(indices);
  if (s == 0) return SparseTensor(value_shape_);
  auto it = components_.find(indices);
  if (it == components_.end()) return SparseTensor(value_shape_);
  return s > 0 ? it->second : -it->second;
}

void CochainForm::add(const FormIndex& increasing, const SparseTensor& value) {
  if (static_cast<int>(increasing.size()) != degree_) throw std::invalid_argument("form index arity");
  for (std::size_t i = 0; i < increasing.size(); ++i) {
    if (increasing[i] < 0 || increasing[i] >= dim_h_) throw std::out_of_range("form index out of range");
    if (i > 0 && increasing[i - 1] >= increasing[i]) throw std::invalid_argument("form index not increasing");
  }
  if (value.shape() != value_shape_) throw std::invalid_argument("form value shape mismatch");
  if (value.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(increasing, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) components_.erase(it);
  }
}

void CochainForm::add_on(std::vector<int> indices, const SparseTensor& value, const Scalar& coeff) {
  const int s = sort_sign(indices);
  if (s == 0 || rwpair::is_zero(coeff) || value.is_zero()) return;
  add(indices, value * (s > 0 ? coeff : Scalar(-coeff)));
}

void CochainForm::check_compatible(const CochainForm& o) const {
  if (o.dim_h_ != dim_h_ || o.degree_ != degree_ || o.value_shape_ != value_shape_)
    throw std::invalid_argument("incompatible cochain forms");
}

CochainForm& CochainForm::operator+=(const CochainForm& o) {
  check_compatible(o);
  for (const auto& [k, v] : o.components_) add(k, v);
  return *this;
}

CochainForm& CochainForm::operator-=(const CochainForm& o) {
  check_compatible(o);
  for (const auto& [k, v] : o.components_) add(k, -v);
  return *this;
}

CochainForm& CochainForm::operator*=(const Scalar& f) {
  if (rwpair::is_zero(f)) {
    components_.clear();
    return *this;
  }
  for (auto& [k, v] : components_) v *= f;
  return *this;
}

bool CochainForm::operator==(const CochainForm& o) const {
  return dim_h_ == o.dim_h_ && degree_ == o.degree_ && value_shape_ == o.value_shape_ &&
         components_ == o.components_;
}

CochainForm CochainForm::permute_values(const Permutation& sigma) const {
  std::vector<int> shape(value_shape_.size());
  for (std::size_t p = 0; p < shape.size(); ++p) shape[p] = value_shape_[sigma(static_cast<int>(p))];
  CochainForm out(dim_h_, degree_, shape);
  for (const auto& [k, v] : components_) out.add(k, tau_apply(sigma, v));
  return out;
}

std::vector<Scalar> CochainForm::to_vector() const {
  const auto tuples = increasing_tuples(dim_h_, degree_);
  const std::size_t vd = value_dim();
  std::vector<Scalar> coords(tuples.size() * vd);
  std::size_t t = 0;
  for (const auto& tuple : tuples) {
    auto it = components_.find(tuple);
    if (it != components_.end())
      for (const auto& [idx, v] : it->second.entries()) coords[t * vd + flat_offset(value_shape_, idx)] = v;
    ++t;
  }
  return coords;
}

CochainForm CochainForm::from_vector(int dim_h, int degree, std::vector<int> value_shape,
                                     const std::vector<Scalar>& coords) {
  CochainForm out(dim_h, degree, std::move(value_shape));
  const auto tuples = increasing_tuples(dim_h, degree);
  const std::size_t vd = out.value_dim();
  if (coords.size() != tuples.size() * vd) throw std::invalid_argument("cochain coordinate size mismatch");
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    SparseTensor value(out.value_shape_);
    for (std::size_t i = 0; i < vd; ++i)
      if (!rwpair::is_zero(coords[t * vd + i])) value.set(unflatten(out.value_shape_, i), coords[t * vd + i]);
    out.add(tuples[t], value);
  }
  return out;
}

std::vector<FormIndex> increasing_tuples(int n, int k) {
  std::vector<FormIndex> out;
  if (k < 0 || k > n) return out;
  FormIndex cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

CochainForm shuffle_wedge(const CochainForm& eta, const CochainForm& mu) {
  if (eta.dim_h() != mu.dim_h()) throw std::invalid_argument("wedge of forms on different algebras");
  const int p = eta.degree(), q = mu.degree();
  std::vector<int> shape = eta.value_shape();
  shape.insert(shape.end(), mu.value_shape().begin(), mu.value_shape().end());
  CochainForm out(eta.dim_h(), p + q, shape);
  if (p + q > eta.dim_h()) return out;
  // Iterate over pairs of components with disjoint supports.
  for (const auto& [i1, v1] : eta.components())
    for (const auto& [i2, v2] : mu.components()) {
      std::vector<int> joined = i1;
      joined.insert(joined.end(), i2.begin(), i2.end());
      std::vector<int> sorted = joined;
      const int s = sort_sign(sorted);
      if (s == 0) continue;
      SparseTensor value = outer(v1, v2);
      if (s < 0) value = -value;
      out.add(sorted, value);
    }
  return out;
}

}  // namespace rwpair
