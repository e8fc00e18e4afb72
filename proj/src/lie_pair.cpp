#include "rwpair/lie_pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace rwpair {

StructureConstants::StructureConstants(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative Lie algebra dimension");
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, Scalar(0));
}

void StructureConstants::set_bracket(int i, int j, int k, const Scalar& v) {
  if (i == j && !rwpair::is_zero(v)) throw std::invalid_argument("[e_i, e_i] must vanish");
  set_raw(i, j, k, v);
  set_raw(j, i, k, -v);
}

void StructureConstants::set_raw(int i, int j, int k, const Scalar& v) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw std::out_of_range("structure constant index");
  c_[offset(i, j, k)] = v;
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("bracket of vectors with wrong dimension");
  Vector out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (rwpair::is_zero(x[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (rwpair::is_zero(y[j])) continue;
      const Scalar xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k)
        if (!rwpair::is_zero((*this)(i, j, k))) out[k] += xy * (*this)(i, j, k);
    }
  }
  return out;
}

Matrix StructureConstants::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vector ej(dim_);
    ej[j] = 1;
    const Vector col = bracket(x, ej);
    for (int k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

StructureConstants StructureConstants::change_basis(const Matrix& basis) const {
  if (basis.rows() != dim_ || basis.cols() != dim_) throw std::invalid_argument("basis change shape");
  const Matrix inv = inverse(basis);
  std::vector<Vector> cols(dim_);
  for (int i = 0; i < dim_; ++i) {
    cols[i].resize(dim_);
    for (int r = 0; r < dim_; ++r) cols[i][r] = basis(r, i);
  }
  StructureConstants out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const Vector coords = inv * bracket(cols[i], cols[j]);
      for (int k = 0; k < dim_; ++k) out.set_raw(i, j, k, coords[k]);
    }
  return out;
}

LiePair::LiePair(StructureConstants g, int sub_dim) : g_(std::move(g)), sub_dim_(sub_dim) {
  if (sub_dim < 0 || sub_dim > g_.dim()) throw std::invalid_argument("subalgebra dimension out of range");
  const int n = g_.dim();
  terms_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!rwpair::is_zero(g_(i, j, k))) terms_[static_cast<std::size_t>(i) * n + j].emplace_back(k, g_(i, j, k));
}

PairReport validate_pair(const LiePair& p) {
  PairReport report;
  const int n = p.dim(), m = p.sub_dim();
  for (int i = 0; i < n && report.antisymmetry.passed; ++i)
    for (int j = i; j < n && report.antisymmetry.passed; ++j)
      for (int k = 0; k < n; ++k)
        if (p.c(i, j, k) != -p.c(j, i, k)) {
          report.antisymmetry.passed = false;
          report.antisymmetry.witness = {i, j};
          report.antisymmetry.detail = "c(i,j,k) != -c(j,i,k) at k = " + std::to_string(k);
          break;
        }
  // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on basis triples.
  for (int i = 0; i < n && report.jacobi.passed; ++i)
    for (int j = i + 1; j < n && report.jacobi.passed; ++j)
      for (int k = j + 1; k < n && report.jacobi.passed; ++k)
        for (int t = 0; t < n; ++t) {
          Scalar s = 0;
          for (int u = 0; u < n; ++u)
            s += p.c(i, j, u) * p.c(u, k, t) + p.c(j, k, u) * p.c(u, i, t) + p.c(k, i, u) * p.c(u, j, t);
          if (!rwpair::is_zero(s)) {
            report.jacobi.passed = false;
            report.jacobi.witness = {i, j, k};
            report.jacobi.detail = "component " + std::to_string(t) + " equals " + format_scalar(s);
            break;
          }
        }
  for (int i = 0; i < m && report.closure.passed; ++i)
    for (int j = 0; j < m && report.closure.passed; ++j)
      for (int k = m; k < n; ++k)
        if (!rwpair::is_zero(p.c(i, j, k))) {
          report.closure.passed = false;
          report.closure.witness = {i, j, k};
          report.closure.detail = "[e_i, e_j] leaves the subalgebra";
          break;
        }
  return report;
}

ModuleRep::ModuleRep(PairPtr pair) : pair_(std::move(pair)) {
  if (!pair_) throw std::invalid_argument("module over a null pair");
}

ModuleRep::ModuleRep(PairPtr pair, int dim, std::vector<Matrix> action) : pair_(std::move(pair)) {
  if (!pair_) throw std::invalid_argument("module over a null pair");
  if (static_cast<int>(action.size()) != pair_->sub_dim())
    throw std::invalid_argument("module needs one action matrix per basis vector of h");
  if (dim < 0) throw std::invalid_argument("negative module dimension");
  for (const Matrix& a : action)
    if (a.rows() != dim || a.cols() != dim) throw std::invalid_argument("action matrices must be dim x dim");
  factors_.push_back({std::make_shared<const std::vector<Matrix>>(std::move(action)), dim, false});
}

std::vector<int> ModuleRep::shape() const {
  std::vector<int> s;
  for (const Factor& f : factors_) s.push_back(f.dim);
  return s;
}

int ModuleRep::dim() const {
  int d = 1;
  for (const Factor& f : factors_) d *= f.dim;
  return d;
}

SparseTensor ModuleRep::act(int a, const SparseTensor& value) const {
  if (a < 0 || a >= pair_->sub_dim()) throw std::out_of_range("action by a vector outside h");
  if (value.shape() != shape()) throw std::invalid_argument("module value shape mismatch");
  SparseTensor out(shape());
  for (std::size_t s = 0; s < factors_.size(); ++s) {
    const Factor& f = factors_[s];
    const Matrix& m = (*f.action)[a];
    for (const auto& [idx, v] : value.entries()) {
      MultiIndex target = idx;
      const int i = idx[s];
      for (int o = 0; o < f.dim; ++o) {
        // Dual slots act by the negative transpose.
        const Scalar& coeff = f.dual ? m(i, o) : m(o, i);
        if (rwpair::is_zero(coeff)) continue;
        target[s] = o;
        out.add(target, f.dual ? Scalar(-coeff * v) : Scalar(coeff * v));
      }
    }
  }
  return out;
}

Matrix ModuleRep::matrix(int a) const {
  const int d = dim();
  const std::vector<int> sh = shape();
  Matrix m(d, d);
  for (int col = 0; col < d; ++col) {
    SparseTensor basis(sh);
    basis.set(unflatten(sh, col), 1);
    const SparseTensor image = act(a, basis);
    for (const auto& [idx, v] : image.entries()) m(static_cast<int>(flat_offset(sh, idx)), col) = v;
  }
  return m;
}

ModuleRep ModuleRep::dual() const {
  ModuleRep out = *this;
  for (Factor& f : out.factors_) f.dual = !f.dual;
  return out;
}

ModuleRep ModuleRep::tensor(const ModuleRep& other) const {
  if (pair_ != other.pair_ && !(*pair_ == *other.pair_))
    throw std::invalid_argument("tensor product of modules over different pairs");
  ModuleRep out = *this;
  out.factors_.insert(out.factors_.end(), other.factors_.begin(), other.factors_.end());
  return out;
}

std::optional<std::array<int, 2>> ModuleRep::flatness_defect() const {
  const int m = pair_->sub_dim();
  std::vector<Matrix> mats;
  for (int a = 0; a < m; ++a) mats.push_back(matrix(a));
  for (int a1 = 0; a1 < m; ++a1)
    for (int a2 = a1 + 1; a2 < m; ++a2) {
      Matrix lhs(dim(), dim());
      for (const auto& [k, c] : pair_->bracket_terms(a1, a2)) {
        if (k >= m) return std::array<int, 2>{a1, a2};
        lhs += c * mats[k];
      }
      if (!(lhs == commutator(mats[a1], mats[a2]))) return std::array<int, 2>{a1, a2};
    }
  return std::nullopt;
}

ModuleRep quotient_rep(const PairPtr& p) {
  const int m = p->sub_dim(), d = p->quotient_dim();
  std::vector<Matrix> action;
  for (int a = 0; a < m; ++a) {
    Matrix r(d, d);
    for (int beta = 0; beta < d; ++beta)
      for (int gamma = 0; gamma < d; ++gamma) r(gamma, beta) = p->c(a, m + beta, m + gamma);
    action.push_back(std::move(r));
  }
  return ModuleRep(p, d, std::move(action));
}

ModuleRep extend_rep(const ModuleRep& rep, int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("negative tensor power");
  ModuleRep out(rep.pair());
  for (int i = 0; i < k; ++i) out = out.tensor(rep);
  const ModuleRep dual = rep.dual();
  for (int i = 0; i < l; ++i) out = out.tensor(dual);
  return out;
}

namespace {

int position_in(const std::vector<int>& sorted, int x) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

std::ptrdiff_t position_of_tuple(const std::vector<FormIndex>& tuples, const FormIndex& t) {
  return std::lower_bound(tuples.begin(), tuples.end(), t) - tuples.begin();
}

std::vector<int> insert_sorted(std::vector<int> v, int x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  return v;
}

}  // namespace

CochainForm ce_differential(const ModuleRep& rep, const CochainForm& eta) {
  const LiePair& p = *rep.pair();
  const int m = p.sub_dim();
  if (eta.dim_h() != m) throw std::invalid_argument("cochain and module live over different algebras");
  if (eta.value_shape() != rep.shape()) throw std::invalid_argument("cochain values do not match the module");
  const int k = eta.degree();
  CochainForm out(m, k + 1, rep.shape());
  if (k + 1 > m) return out;

  for (const auto& [J, value] : eta.components()) {
    for (int a = 0; a < m; ++a) {
      if (std::binary_search(J.begin(), J.end(), a)) continue;
      const std::vector<int> I = insert_sorted(J, a);
      SparseTensor moved = rep.act(a, value);
      if (position_in(I, a) % 2) moved = -moved;
      out.add(I, moved);
    }
    for (int t = 0; t < k; ++t) {
      const int s = J[t];
      std::vector<int> rest = J;
      rest.erase(rest.begin() + t);
      for (int a = 0; a < m; ++a) {
        if (std::binary_search(rest.begin(), rest.end(), a)) continue;
        for (int b = a + 1; b < m; ++b) {
          if (std::binary_search(rest.begin(), rest.end(), b)) continue;
          const Scalar& c = p.c(a, b, s);
          if (rwpair::is_zero(c)) continue;
          const std::vector<int> I = insert_sorted(insert_sorted(rest, a), b);
          const int sign_exp = position_in(I, a) + position_in(I, b) + t;
          out.add(I, value * (sign_exp % 2 ? Scalar(-c) : c));
        }
      }
    }
  }
  return out;
}

SparseMatrix differential_matrix(const ModuleRep& rep, int k) {
  const int m = rep.pair()->sub_dim();
  const std::vector<int> shape = rep.shape();
  const auto src = increasing_tuples(m, k);
  const auto dst = increasing_tuples(m, k + 1);
  const std::size_t vd = static_cast<std::size_t>(rep.dim());
  SparseMatrix out(static_cast<int>(dst.size() * vd), static_cast<int>(src.size() * vd));
  if (dst.empty()) return out;
  for (std::size_t t = 0; t < src.size(); ++t)
    for (std::size_t v = 0; v < vd; ++v) {
      CochainForm e(m, k, shape);
      SparseTensor unit(shape);
      unit.set(unflatten(shape, v), 1);
      e.add(src[t], unit);
      const CochainForm de = ce_differential(rep, e);
      for (const auto& [I, value] : de.components()) {
        const std::size_t row = static_cast<std::size_t>(position_of_tuple(dst, I));
        for (const auto& [idx, x] : value.entries())
          out.add(static_cast<int>(row * vd + flat_offset(shape, idx)), static_cast<int>(t * vd + v), x);
      }
    }
  return out;
}

namespace {

std::vector<Vector> columns_of(const SparseMatrix& m) {
  std::vector<Vector> cols(m.cols(), Vector(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) cols[c][r] = v;
  return cols;
}

SparseMatrix from_columns(const std::vector<Vector>& cols, int rows) {
  SparseMatrix m(rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r)
      if (!rwpair::is_zero(cols[c][r])) m.add(r, static_cast<int>(c), cols[c][r]);
  return m;
}

SparseMatrix rows_matrix(const std::vector<Vector>& rows, int cols) {
  SparseMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c)
      if (!rwpair::is_zero(rows[r][c])) m.add(static_cast<int>(r), c, rows[r][c]);
  return m;
}

}  // namespace

CohomologyInfo cohomology(const ModuleRep& rep, int k) {
  const int m = rep.pair()->sub_dim();
  CohomologyInfo info;
  info.degree = k;
  if (k < 0 || k > m) return info;
  const int vd = rep.dim();
  const int n_k = static_cast<int>(increasing_tuples(m, k).size()) * vd;
  info.cochain_dim = n_k;
  const SparseMatrix dk = differential_matrix(rep, k);
  const std::vector<Vector> kernel = kernel_basis(dk);
  info.cocycle_dim = static_cast<int>(kernel.size());
  std::vector<Vector> spanning;
  if (k > 0) {
    const SparseMatrix dprev = differential_matrix(rep, k - 1);
    for (Vector& col : columns_of(dprev))
      if (std::any_of(col.begin(), col.end(), [](const Scalar& x) { return !rwpair::is_zero(x); }))
        spanning.push_back(std::move(col));
    info.coboundary_dim = rank(rows_matrix(spanning, n_k));
  }
  info.dim = info.cocycle_dim - info.coboundary_dim;
  int current = info.coboundary_dim;
  for (const Vector& z : kernel) {
    if (static_cast<int>(info.basis.size()) == info.dim) break;
    spanning.push_back(z);
    const int r = rank(rows_matrix(spanning, n_k));
    if (r > current) {
      current = r;
      info.basis.push_back(CochainForm::from_vector(m, k, rep.shape(), z));
    } else {
      spanning.pop_back();
    }
  }
  return info;
}

std::optional<CochainForm> is_coboundary(const ModuleRep& rep, const CochainForm& z) {
  if (!ce_differential(rep, z).is_zero()) throw std::invalid_argument("is_coboundary needs a closed cochain");
  const int m = rep.pair()->sub_dim();
  const int k = z.degree();
  if (k == 0) {
    if (z.is_zero()) return CochainForm(m, 0, rep.shape());
    return std::nullopt;
  }
  const SparseMatrix d = differential_matrix(rep, k - 1);
  const auto x = solve(d, z.to_vector());
  if (!x) return std::nullopt;
  CochainForm phi = CochainForm::from_vector(m, k - 1, rep.shape(), *x);
  if (!(ce_differential(rep, phi) == z)) throw std::logic_error("coboundary solve produced a wrong primitive");
  return phi;
}

bool class_equal(const ModuleRep& rep, const CochainForm& z1, const CochainForm& z2) {
  return is_coboundary(rep, z1 - z2).has_value();
}

Vector class_coordinates(const ModuleRep& rep, const CohomologyInfo& info, const CochainForm& z) {
  const int k = z.degree();
  if (k != info.degree) throw std::invalid_argument("class coordinates requested in the wrong degree");
  const Vector target = z.to_vector();
  std::vector<Vector> cols;
  for (const CochainForm& b : info.basis) cols.push_back(b.to_vector());
  if (k > 0)
    for (Vector& col : columns_of(differential_matrix(rep, k - 1))) cols.push_back(std::move(col));
  const auto x = solve(from_columns(cols, static_cast<int>(target.size())), target);
  if (!x) throw std::invalid_argument("cochain is not closed");
  return Vector(x->begin(), x->begin() + static_cast<long>(info.basis.size()));
}

}  // namespace rwpair
