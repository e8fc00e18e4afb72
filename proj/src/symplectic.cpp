#include "rwpair/symplectic.hpp"

#include "rwpair/errors.hpp"

#include <stdexcept>

namespace rwpair {

std::optional<std::array<int, 3>> closedness_defect(const StructureConstants& g, const Matrix& w) {
  const int n = g.dim();
  // W([e_i, e_j], e_k) with the bracket expanded in structure constants.
  auto bracket_pair = [&](int i, int j, int k) {
    Scalar s = 0;
    for (int t = 0; t < n; ++t)
      if (!rwpair::is_zero(g(i, j, t))) s += g(i, j, t) * w(t, k);
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Scalar v = -bracket_pair(i, j, k) + bracket_pair(i, k, j) - bracket_pair(j, k, i);
        if (!rwpair::is_zero(v)) return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

Matrix pullback(const LiePair& p, const Matrix& omega) {
  const int m = p.sub_dim(), d = p.quotient_dim();
  if (omega.rows() != d || omega.cols() != d) throw std::invalid_argument("form size differs from dim q");
  Matrix big(p.dim(), p.dim());
  for (int b = 0; b < d; ++b)
    for (int c = 0; c < d; ++c) big(m + b, m + c) = omega(b, c);
  return big;
}

SymplecticReport check_symplectic(const LiePair& p, const Matrix& omega) {
  const int d = p.quotient_dim();
  if (omega.rows() != d || omega.cols() != d) throw std::invalid_argument("form size differs from dim q");
  SymplecticReport r;
  for (int b = 0; b < d && r.antisymmetric; ++b)
    for (int c = b; c < d; ++c)
      if (omega(b, c) != -omega(c, b)) {
        r.antisymmetric = false;
        r.antisymmetry_witness = std::array<int, 2>{b, c};
        break;
      }
  r.even_dimension = d % 2 == 0;
  r.determinant = determinant(omega);
  r.nondegenerate = !rwpair::is_zero(r.determinant);
  if (!r.nondegenerate) {
    const auto kernel = kernel_basis(omega);
    if (!kernel.empty()) r.kernel_witness = kernel.front();
  }
  if (auto w = closedness_defect(p.algebra(), pullback(p, omega))) {
    r.closed = false;
    r.closedness_witness = w;
  }
  return r;
}

SymplecticForm::SymplecticForm(PairPtr pair, Matrix omega) : pair_(std::move(pair)), omega_(std::move(omega)) {
  if (!pair_) throw std::invalid_argument("symplectic form over a null pair");
  const SymplecticReport r = check_symplectic(*pair_, omega_);
  if (!r.even_dimension) throw std::invalid_argument("odd-dimensional quotient carries no symplectic form");
  if (!r.antisymmetric) throw std::invalid_argument("form is not antisymmetric");
  if (!r.nondegenerate) throw std::invalid_argument("form is degenerate");
  inverse_ = inverse(omega_);
  closed_ = r.closed;
}

namespace {

// Scales each vector so that its first nonzero coordinate is 1.
void normalize_leading(std::vector<Vector>& vs) {
  for (Vector& v : vs)
    for (const Scalar& x : v)
      if (!rwpair::is_zero(x)) {
        const Scalar lead = x;
        for (Scalar& y : v) y /= lead;
        break;
      }
}

// Columns: the given vectors, then standard vectors completing a basis.
Matrix complete_basis(const std::vector<Vector>& first, int n) {
  std::vector<Vector> rows = first;
  for (int j = 0; j < n && static_cast<int>(rows.size()) < n; ++j) {
    Vector e(n);
    e[j] = 1;
    rows.push_back(e);
    if (rank(Matrix::from_rows(rows)) < static_cast<int>(rows.size())) rows.pop_back();
  }
  return Matrix::from_rows(rows).transpose();
}

Vector column(const Matrix& m, int c) {
  Vector v(m.rows());
  for (int r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

}  // namespace

ReducedPair presymplectic_to_pair(const StructureConstants& g, const Matrix& big_omega) {
  const int n = g.dim();
  if (big_omega.rows() != n || big_omega.cols() != n) throw std::invalid_argument("form size differs from dim g");
  if (!(big_omega.transpose() == big_omega * Scalar(-1))) throw std::invalid_argument("form is not antisymmetric");
  if (auto w = closedness_defect(g, big_omega))
    throw MathError("form is not closed", {(*w)[0], (*w)[1], (*w)[2]});
  std::vector<Vector> kernel = kernel_basis(big_omega);
  normalize_leading(kernel);
  const int m = static_cast<int>(kernel.size());
  const Matrix basis = complete_basis(kernel, n);
  auto pair = std::make_shared<const LiePair>(g.change_basis(basis), m);
  const Matrix full = basis.transpose() * big_omega * basis;
  Matrix omega(n - m, n - m);
  for (int b = 0; b < n - m; ++b)
    for (int c = 0; c < n - m; ++c) omega(b, c) = full(m + b, m + c);
  return {pair, SymplecticForm(pair, omega), basis};
}

ReducedPair coadjoint_pair(const StructureConstants& g, const Vector& x, const Matrix& pairing) {
  const int n = g.dim();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("element has wrong dimension");
  if (pairing.rows() != n || pairing.cols() != n) throw std::invalid_argument("pairing has wrong size");
  if (!(pairing.transpose() == pairing)) throw std::invalid_argument("pairing is not symmetric");
  if (rwpair::is_zero(determinant(pairing))) throw std::invalid_argument("pairing is degenerate");
  for (int a = 0; a < n; ++a) {
    const Matrix ad = g.ad([&] { Vector e(n); e[a] = 1; return e; }());
    // Invariance: B(ad_a u, v) + B(u, ad_a v) = 0.
    if (!(ad.transpose() * pairing + pairing * ad).is_zero()) throw std::invalid_argument("pairing is not invariant");
  }
  std::vector<Vector> centralizer = kernel_basis(g.ad(x));
  normalize_leading(centralizer);
  const int m = static_cast<int>(centralizer.size());
  const Matrix basis = complete_basis(centralizer, n);
  auto pair = std::make_shared<const LiePair>(g.change_basis(basis), m);
  const Vector bx = pairing * x;
  Matrix omega(n - m, n - m);
  for (int b = 0; b < n - m; ++b)
    for (int c = 0; c < n - m; ++c) {
      const Vector br = g.bracket(column(basis, m + b), column(basis, m + c));
      Scalar s = 0;
      for (int k = 0; k < n; ++k) s += bx[k] * br[k];
      omega(b, c) = s;
    }
  if ((n - m) % 2 != 0 || (n > m && rwpair::is_zero(determinant(omega))))
    throw MathError("induced form on the quotient is degenerate");
  return {pair, SymplecticForm(pair, omega), basis};
}

namespace {

Vector flatten(const Matrix& x) {
  Vector v;
  v.reserve(static_cast<std::size_t>(x.rows()) * x.cols());
  for (int r = 0; r < x.rows(); ++r)
    for (int c = 0; c < x.cols(); ++c) v.push_back(x(r, c));
  return v;
}

Scalar trace(const Matrix& x) {
  Scalar s = 0;
  for (int i = 0; i < x.rows(); ++i) s += x(i, i);
  return s;
}

}  // namespace

Vector MatrixLieAlgebra::coordinates(const Matrix& x) const {
  std::vector<Vector> cols;
  for (const Matrix& b : basis) cols.push_back(flatten(b));
  const Vector target = flatten(x);
  Matrix a(static_cast<int>(target.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < target.size(); ++r) a(static_cast<int>(r), static_cast<int>(c)) = cols[c][r];
  auto sol = solve(a, target);
  if (!sol) throw std::invalid_argument("matrix is not in the span of the basis");
  return *sol;
}

MatrixLieAlgebra matrix_lie_algebra(std::vector<Matrix> basis, std::vector<std::string> names) {
  const int n = static_cast<int>(basis.size());
  if (static_cast<int>(names.size()) != n) throw std::invalid_argument("one name per basis matrix");
  std::vector<Vector> flat;
  for (const Matrix& b : basis) flat.push_back(flatten(b));
  if (n > 0 && rank(Matrix::from_rows(flat)) != n) throw std::invalid_argument("basis matrices are dependent");
  MatrixLieAlgebra alg{std::move(basis), std::move(names), StructureConstants(n), Matrix(n, n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      alg.trace_form(i, j) = trace(alg.basis[i] * alg.basis[j]);
      if (j <= i) continue;
      const Vector c = alg.coordinates(commutator(alg.basis[i], alg.basis[j]));
      for (int k = 0; k < n; ++k) alg.constants.set_bracket(i, j, k, c[k]);
    }
  return alg;
}

MatrixLieAlgebra special_linear(int n) {
  if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix e(n, n);
      e(i, j) = 1;
      basis.push_back(e);
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int i = 0; i + 1 < n; ++i) {
    Matrix h(n, n);
    h(i, i) = 1;
    h(i + 1, i + 1) = -1;
    basis.push_back(h);
    names.push_back("H" + std::to_string(i + 1));
  }
  return matrix_lie_algebra(std::move(basis), std::move(names));
}

}  // namespace rwpair
