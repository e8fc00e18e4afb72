#pragma once

#include "rwpair/cochain.hpp"
#include "rwpair/linalg.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rwpair {

/// Structure constants of a finite-dimensional Lie algebra:
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int dim);

  int dim() const { return dim_; }
  const Scalar& operator()(int i, int j, int k) const { return c_[offset(i, j, k)]; }
  /// Sets c(i,j,k) = v and c(j,i,k) = -v.
  void set_bracket(int i, int j, int k, const Scalar& v);
  /// Sets a single entry without touching its antisymmetric partner.
  void set_raw(int i, int j, int k, const Scalar& v);

  /// Bracket of two coordinate vectors.
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad_x acting on coordinate vectors.
  Matrix ad(const Vector& x) const;
  /// Structure constants in a new basis, given as the columns of `basis`
  /// (coordinates in the current basis). Throws when `basis` is singular.
  StructureConstants change_basis(const Matrix& basis) const;

  bool operator==(const StructureConstants&) const = default;

 private:
  std::size_t offset(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }
  int dim_ = 0;
  std::vector<Scalar> c_;
};

/// A Lie algebra g with the subalgebra h spanned by its first sub_dim basis
/// vectors. The quotient q = g/h has basis the images of the remaining ones.
class LiePair {
 public:
  LiePair() = default;
  LiePair(StructureConstants g, int sub_dim);

  int dim() const { return g_.dim(); }
  int sub_dim() const { return sub_dim_; }
  int quotient_dim() const { return g_.dim() - sub_dim_; }
  const StructureConstants& algebra() const { return g_; }
  const Scalar& c(int i, int j, int k) const { return g_(i, j, k); }

  /// Nonzero (k, c_ij^k) pairs.
  const std::vector<std::pair<int, Scalar>>& bracket_terms(int i, int j) const {
    return terms_[static_cast<std::size_t>(i) * dim() + j];
  }

  bool operator==(const LiePair& o) const { return sub_dim_ == o.sub_dim_ && g_ == o.g_; }

 private:
  StructureConstants g_;
  int sub_dim_ = 0;
  std::vector<std::vector<std::pair<int, Scalar>>> terms_;
};

using PairPtr = std::shared_ptr<const LiePair>;

struct Check {
  std::string name;
  bool passed = true;
  std::vector<int> witness;
  std::string detail;
};

struct PairReport {
  Check antisymmetry{"antisymmetry", true, {}, {}};
  Check jacobi{"jacobi", true, {}, {}};
  Check closure{"subalgebra closure", true, {}, {}};
  bool ok() const { return antisymmetry.passed && jacobi.passed && closure.passed; }
};

/// Witnesses: (i, j) for antisymmetry, (i, j, k) for Jacobi, and (i, j, k)
/// with i, j in h and k outside h for closure.
PairReport validate_pair(const LiePair& p);

/// A representation of h on a tensor product of factors. Each factor is
/// either a base representation (matrices indexed [out][in]) or its dual.
/// A representation without factors is the trivial one-dimensional module.
class ModuleRep {
 public:
  struct Factor {
    std::shared_ptr<const std::vector<Matrix>> action;
    int dim = 0;
    bool dual = false;
  };

  ModuleRep() = default;
  /// Trivial module (scalar values).
  explicit ModuleRep(PairPtr pair);
  /// Single factor given by one dim x dim matrix per basis vector of h.
  ModuleRep(PairPtr pair, int dim, std::vector<Matrix> action);

  const PairPtr& pair() const { return pair_; }
  const std::vector<Factor>& factors() const { return factors_; }
  std::vector<int> shape() const;
  int dim() const;

  /// Dense matrix of the action of basis vector a on the whole module.
  Matrix matrix(int a) const;
  /// Action of basis vector a on a value tensor of this module's shape.
  SparseTensor act(int a, const SparseTensor& value) const;

  ModuleRep dual() const;
  /// Tensor product; this module's slots come first.
  ModuleRep tensor(const ModuleRep& other) const;

  /// Witness (a1, a2) where action([a1,a2]) != [action(a1), action(a2)].
  std::optional<std::array<int, 2>> flatness_defect() const;

 private:
  PairPtr pair_;
  std::vector<Factor> factors_;
};

/// h acting on q by a . l = [a, l] mod h. Matrices indexed [out][in].
ModuleRep quotient_rep(const PairPtr& p);
/// rep^{(x)k} (x) (rep*)^{(x)l}.
ModuleRep extend_rep(const ModuleRep& rep, int k, int l);

/// (d eta)(a_0..a_k) = sum_p (-1)^p a_p . eta(.. no a_p ..)
///                   + sum_{p<q} (-1)^{p+q} eta([a_p, a_q], .. no a_p, a_q ..).
CochainForm ce_differential(const ModuleRep& rep, const CochainForm& eta);

/// Matrix of the differential from degree-k to degree-(k+1) cochains in the
/// to_vector coordinates.
SparseMatrix differential_matrix(const ModuleRep& rep, int k);

struct CohomologyInfo {
  int degree = 0;
  int cochain_dim = 0;
  int cocycle_dim = 0;
  int coboundary_dim = 0;
  int dim = 0;
  /// Cocycles whose classes form a basis of H^k.
  std::vector<CochainForm> basis;
};

CohomologyInfo cohomology(const ModuleRep& rep, int k);

/// A primitive phi with d phi = z, or nullopt. Throws std::invalid_argument
/// when z is not closed.
std::optional<CochainForm> is_coboundary(const ModuleRep& rep, const CochainForm& z);
bool class_equal(const ModuleRep& rep, const CochainForm& z1, const CochainForm& z2);
/// Coordinates of the class of z in info.basis.
Vector class_coordinates(const ModuleRep& rep, const CohomologyInfo& info, const CochainForm& z);

}  // namespace rwpair
