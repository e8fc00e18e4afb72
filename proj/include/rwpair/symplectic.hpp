#pragma once

#include "rwpair/lie_pair.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rwpair {

struct SymplecticReport {
  bool antisymmetric = true;
  bool even_dimension = true;
  bool nondegenerate = true;
  bool closed = true;
  Scalar determinant;
  /// (beta, gamma) with omega(beta, gamma) != -omega(gamma, beta).
  std::optional<std::array<int, 2>> antisymmetry_witness;
  /// A nonzero vector in the kernel of omega.
  std::optional<Vector> kernel_witness;
  /// Basis triple of g on which d(p* omega) does not vanish.
  std::optional<std::array<int, 3>> closedness_witness;

  bool ok() const { return antisymmetric && even_dimension && nondegenerate && closed; }
};

/// Checks a candidate form on q (a dim q x dim q matrix).
SymplecticReport check_symplectic(const LiePair& p, const Matrix& omega);

/// First basis triple (i < j < k) of g with
/// -W([e_i,e_j],e_k) + W([e_i,e_k],e_j) - W([e_j,e_k],e_i) != 0.
std::optional<std::array<int, 3>> closedness_defect(const StructureConstants& g, const Matrix& w);

/// A nondegenerate antisymmetric form on the quotient of a Lie pair.
/// Entry (b, c) of matrix() is omega(e_b, e_c) in the quotient basis.
class SymplecticForm {
 public:
  SymplecticForm() = default;
  /// Throws std::invalid_argument when omega is not antisymmetric, has the
  /// wrong size, odd size, or is degenerate. Closedness is recorded, not
  /// enforced.
  SymplecticForm(PairPtr pair, Matrix omega);

  const PairPtr& pair() const { return pair_; }
  int dim() const { return omega_.rows(); }
  const Matrix& matrix() const { return omega_; }
  /// Components P of the inverse form: sum_c omega(b, c) P(c, d) = delta(b, d).
  const Matrix& inverse_matrix() const { return inverse_; }
  /// Matrix of v -> omega(v, .) as a map q -> q*, indexed [out][in].
  Matrix flat() const { return omega_.transpose(); }
  /// Matrix of the inverse of flat().
  Matrix sharp() const { return inverse_.transpose(); }
  bool closed() const { return closed_; }

  bool operator==(const SymplecticForm& o) const { return omega_ == o.omega_; }

 private:
  PairPtr pair_;
  Matrix omega_;
  Matrix inverse_;
  bool closed_ = false;
};

/// Pullback of a quotient form to g (zero whenever an argument lies in h).
Matrix pullback(const LiePair& p, const Matrix& omega);

struct ReducedPair {
  PairPtr pair;
  SymplecticForm omega;
  /// Columns are the new basis of g in the original coordinates; the first
  /// sub_dim columns span h.
  Matrix basis;
};

/// Given a closed 2-form on a Lie algebra, takes h = ker and descends the
/// form to g/h. Throws MathError with a witness triple when it is not closed,
/// std::invalid_argument when it is not antisymmetric.
ReducedPair presymplectic_to_pair(const StructureConstants& g, const Matrix& big_omega);

/// Pair (g, centralizer of x) with omega(a, b) = pairing(x, [a, b]).
/// The complement of h is spanned by the first standard basis vectors that
/// extend a basis of h. Throws std::invalid_argument when the pairing is
/// not symmetric, invariant or nondegenerate, and MathError when the induced
/// form is degenerate.
ReducedPair coadjoint_pair(const StructureConstants& g, const Vector& x, const Matrix& pairing);

/// A Lie algebra of matrices with its structure constants in the given basis.
struct MatrixLieAlgebra {
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  StructureConstants constants;
  /// tr(X_i X_j).
  Matrix trace_form;

  /// Coordinates of a matrix in the basis. Throws when it is not in the span.
  Vector coordinates(const Matrix& x) const;
};

/// Throws std::invalid_argument when the basis is dependent or not closed
/// under commutators.
MatrixLieAlgebra matrix_lie_algebra(std::vector<Matrix> basis, std::vector<std::string> names);

/// sl(n) with basis E_ij (i != j, row-major order) followed by
/// H_i = E_ii - E_{i+1,i+1}.
MatrixLieAlgebra special_linear(int n);

}  // namespace rwpair
