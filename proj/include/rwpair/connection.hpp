#pragma once

#include "rwpair/lie_pair.hpp"
#include "rwpair/symplectic.hpp"

#include <optional>
#include <random>
#include <vector>

namespace rwpair {

/// A g-connection on an h-module E (by default E = q). Stored as one
/// operator per basis vector e_i of g: op(i)(out, in) is the out-component of
/// nabla_{e_i} applied to the in-th basis vector of E.
class Connection {
 public:
  Connection() = default;
  /// Connection on q = g/h.
  Connection(PairPtr pair, std::vector<Matrix> ops);
  /// Connection on a module E.
  Connection(ModuleRep target, std::vector<Matrix> ops, bool on_quotient = false);

  const PairPtr& pair() const { return target_.pair(); }
  const ModuleRep& target() const { return target_; }
  bool on_quotient() const { return on_quotient_; }
  int target_dim() const { return target_.dim(); }

  const Matrix& op(int i) const { return ops_[i]; }
  const std::vector<Matrix>& ops() const { return ops_; }
  /// Gamma_{i, in}^{out}.
  const Scalar& gamma(int i, int in, int out) const { return ops_[i](out, in); }

  /// op(a) equals the module action for every a in h.
  bool extends_action() const { return extends_action_; }
  /// Only meaningful on q; false for other targets.
  bool torsion_free() const { return torsion_free_; }
  bool is_symplectic(const SymplecticForm& w) const;

  bool operator==(const Connection& o) const { return ops_ == o.ops_ && on_quotient_ == o.on_quotient_; }

 private:
  ModuleRep target_;
  std::vector<Matrix> ops_;
  bool on_quotient_ = false;
  bool extends_action_ = false;
  bool torsion_free_ = false;
};

/// nabla_a = action for a in h, zero on the complement.
Connection extend_action_connection(const PairPtr& p);
Connection extend_action_connection(const ModuleRep& e);
/// Same, with uniformly random integer-over-denominator entries on the
/// complement block.
Connection random_extend_action_connection(const PairPtr& p, std::mt19937_64& rng, int bound = 3,
                                           int denominator = 2);
Connection random_extend_action_connection(const ModuleRep& e, std::mt19937_64& rng, int bound = 3,
                                           int denominator = 2);

/// T(e_i, e_j) as a tensor of shape (n, n, dim q).
SparseTensor torsion(const Connection& c);
/// Torsion restricted to the complement, as a 0-form in q* (x) q* (x) q.
CochainForm torsion_form(const Connection& c);
/// R(e_i, e_j) = [op(i), op(j)] - sum_k c_ij^k op(k).
Matrix curvature(const Connection& c, int i, int j);

/// (nabla_{e_i} omega)(b, c), shape (n, dim q, dim q).
SparseTensor nabla_omega(const Connection& c, const SymplecticForm& w);
/// Restriction of nabla omega to the complement: a 0-form in (q*)^3.
CochainForm nabla_omega_form(const Connection& c, const SymplecticForm& w);

/// Subtracts half the torsion. Throws MathError unless c extends the action.
Connection make_torsion_free(const Connection& c);
/// Adds the correction S making omega parallel. Throws MathError unless c
/// is torsion-free and extends the action, or when w is not closed.
Connection make_symplectic(const Connection& c, const SymplecticForm& w);

/// Module q* (x) E* (x) E in which Atiyah cocycles take values.
ModuleRep atiyah_module(const Connection& c);
/// (q*)^{(x)3}.
ModuleRep tilde_module(const PairPtr& p);

/// R(a)[b][in][out] = R(a, e_{m+b})(out, in). Throws MathError unless c
/// extends the action.
CochainForm atiyah_cocycle(const Connection& c);
/// Lowers the last slot with omega: value[b1][b2][b3] = sum_g R[b1][b2][g] omega(g, b3).
CochainForm tilde_cocycle(const CochainForm& r, const SymplecticForm& w);
/// c1 - c2 on the complement as a 0-form in q* (x) E* (x) E. Both must
/// extend the action on the same module.
CochainForm connection_difference(const Connection& c1, const Connection& c2);

struct SymmetryDefects {
  CochainForm lhs23, rhs23;  ///< Rt - tau_(23) Rt and d(-nabla omega)
  CochainForm lhs12, rhs12;  ///< R - tau_(12) R and d(T)
};
SymmetryDefects symmetry_defects(const Connection& c, const SymplecticForm& w);

/// A connection on q with T(a, l) = 0 and R(a, l) = 0 for all a in h, or
/// nullopt when none exists.
std::optional<Connection> compatible_connection(const PairPtr& p);

/// Module (q*)^{(x)3} (x) q of the Bianchi form.
ModuleRep psi_module(const PairPtr& p);
/// The 2-form psi(b1,b2,b3) built from the Atiyah cocycle of c. With a
/// symplectic form the output slot is lowered by omega.
CochainForm bianchi_psi(const Connection& c, const SymplecticForm* w = nullptr);

}  // namespace rwpair
