#include "rwpair/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rwpair {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(int r) const {
  return Vector(data_.begin() + static_cast<long>(r) * cols_,
                data_.begin() + static_cast<long>(r + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return rwpair::is_zero(x); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& f) {
  for (auto& x : data_) x *= f;
  return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (rwpair::is_zero(a)) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!rwpair::is_zero(o(k, j))) p(i, j) += a * o(k, j);
    }
  return p;
}

Vector Matrix::operator*(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!rwpair::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m, Vector* rhs = nullptr) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
    }
    const Scalar inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    if (rhs) (*rhs)[r] *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      if (rhs) (*rhs)[i] -= f * (*rhs)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const Matrix& m) {
  Matrix a = m;
  return static_cast<int>(rref(a).size());
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix a = m;
  Vector b = rhs;
  const auto pivots = rref(a, &b);
  for (int r = static_cast<int>(pivots.size()); r < m.rows(); ++r)
    if (!is_zero(b[r])) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix a = m;
  Scalar det = 1;
  const int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[n - 1] >= n))
    throw std::domain_error("matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void SparseMatrix::add(int r, int c, const Scalar& value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("sparse matrix index");
  if (is_zero(value)) return;
  Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (is_zero(it->second)) row.erase(it);
  } else {
    row.insert(it, {c, value});
  }
}

void SparseMatrix::set_row(int r, Row row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Row clean;
  for (auto& [c, v] : row) {
    if (c < 0 || c >= cols_) throw std::out_of_range("sparse matrix column");
    if (!clean.empty() && clean.back().first == c)
      clean.back().second += v;
    else
      clean.emplace_back(c, std::move(v));
    if (is_zero(clean.back().second)) clean.pop_back();
  }
  data_[r] = std::move(clean);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Vector SparseMatrix::operator*(const Vector& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("sparse product dimension mismatch");
  Vector out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r] += v * x[c];
  return out;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) m(r, c) = v;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) s.data_[r].emplace_back(c, m(r, c));
  return s;
}

namespace {

using Row = SparseMatrix::Row;

// row <- row - f * pivot, both sorted by column.
Row axpy(const Row& row, const Scalar& f, const Row& pivot) {
  Row out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -f * b->second);
      ++b;
    } else {
      Scalar v = a->second - f * b->second;
      if (!is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

struct Echelon {
  // Pivot column -> (normalized row with leading 1 at the pivot, rhs).
  std::map<int, std::pair<Row, Scalar>> pivots;
  bool consistent = true;

  void insert(Row row, Scalar rhs) {
    while (!row.empty()) {
      const int lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const Scalar inv = 1 / row.front().second;
        for (auto& e : row) e.second *= inv;
        rhs *= inv;
        pivots.emplace(lead, std::make_pair(std::move(row), std::move(rhs)));
        return;
      }
      const Scalar f = row.front().second;
      row = axpy(row, f, it->second.first);
      rhs -= f * it->second.second;
    }
    if (!is_zero(rhs)) consistent = false;
  }

  // Back substitution into x for the given free-variable assignment.
  void back_substitute(Vector& x) const {
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto& [row, rhs] = it->second;
      Scalar v = rhs;
      for (std::size_t k = 1; k < row.size(); ++k) v -= row[k].second * x[row[k].first];
      x[it->first] = v;
    }
  }
};

struct Blocks {
  std::vector<std::vector<int>> rows;  // rows per block
  std::vector<int> empty_rows;
};

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

Blocks split_blocks(const SparseMatrix& m) {
  std::vector<int> parent(m.cols());
  std::iota(parent.begin(), parent.end(), 0);
  for (int r = 0; r < m.rows(); ++r) {
    const Row& row = m.row(r);
    for (std::size_t k = 1; k < row.size(); ++k) {
      const int a = find(parent, row[0].first), b = find(parent, row[k].first);
      if (a != b) parent[a] = b;
    }
  }
  Blocks blocks;
  std::map<int, int> block_of_root;
  for (int r = 0; r < m.rows(); ++r) {
    const Row& row = m.row(r);
    if (row.empty()) {
      blocks.empty_rows.push_back(r);
      continue;
    }
    const int root = find(parent, row[0].first);
    auto [it, inserted] = block_of_root.try_emplace(root, static_cast<int>(blocks.rows.size()));
    if (inserted) blocks.rows.emplace_back();
    blocks.rows[it->second].push_back(r);
  }
  return blocks;
}

// Sparser rows first keeps fill-in down.
std::vector<int> by_length(const SparseMatrix& m, std::vector<int> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [&](int a, int b) { return m.row(a).size() < m.row(b).size(); });
  return rows;
}

}  // namespace

int rank(const SparseMatrix& m) {
  int total = 0;
  for (const auto& rows : split_blocks(m).rows) {
    Echelon e;
    for (int r : by_length(m, rows)) e.insert(m.row(r), 0);
    total += static_cast<int>(e.pivots.size());
  }
  return total;
}

std::optional<Vector> solve(const SparseMatrix& m, const Vector& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  const Blocks blocks = split_blocks(m);
  for (int r : blocks.empty_rows)
    if (!is_zero(rhs[r])) return std::nullopt;
  Vector x(m.cols());
  for (const auto& rows : blocks.rows) {
    bool homogeneous = true;
    for (int r : rows) homogeneous = homogeneous && is_zero(rhs[r]);
    if (homogeneous) continue;  // zero is a solution on this block
    Echelon e;
    for (int r : by_length(m, rows)) {
      e.insert(m.row(r), rhs[r]);
      if (!e.consistent) return std::nullopt;
    }
    e.back_substitute(x);
  }
  return x;
}

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  const Blocks blocks = split_blocks(m);
  std::vector<bool> touched(m.cols(), false);
  std::vector<Vector> basis;
  for (const auto& rows : blocks.rows) {
    Echelon e;
    for (int r : by_length(m, rows)) e.insert(m.row(r), 0);
    std::vector<int> cols;
    for (int r : rows)
      for (const auto& [c, v] : m.row(r)) touched[c] = true, cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (int f : cols) {
      if (e.pivots.count(f)) continue;
      Vector x(m.cols());
      x[f] = 1;
      // Pivot rows only reference columns of this block.
      for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        const Row& row = it->second.first;
        Scalar v = 0;
        for (std::size_t k = 1; k < row.size(); ++k) v -= row[k].second * x[row[k].first];
        x[it->first] = v;
      }
      basis.push_back(std::move(x));
    }
  }
  for (int c = 0; c < m.cols(); ++c) {
    if (touched[c]) continue;
    Vector x(m.cols());
    x[c] = 1;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace rwpair
