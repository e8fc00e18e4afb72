#include "rwpair/connection.hpp"

#include "rwpair/errors.hpp"

#include <stdexcept>

namespace rwpair {

namespace {

bool action_matches(const ModuleRep& target, const std::vector<Matrix>& ops) {
  for (int a = 0; a < target.pair()->sub_dim(); ++a)
    if (!(ops[a] == target.matrix(a))) return false;
  return true;
}

void check_ops(const ModuleRep& target, const std::vector<Matrix>& ops) {
  const int n = target.pair()->dim(), d = target.dim();
  if (static_cast<int>(ops.size()) != n) throw std::invalid_argument("connection needs one operator per basis vector of g");
  for (const Matrix& m : ops)
    if (m.rows() != d || m.cols() != d) throw std::invalid_argument("connection operator has wrong size");
}

}  // namespace

Connection::Connection(PairPtr pair, std::vector<Matrix> ops)
    : Connection(quotient_rep(pair), std::move(ops), true) {}

Connection::Connection(ModuleRep target, std::vector<Matrix> ops, bool on_quotient)
    : target_(std::move(target)), ops_(std::move(ops)), on_quotient_(on_quotient) {
  check_ops(target_, ops_);
  extends_action_ = action_matches(target_, ops_);
  if (on_quotient_) torsion_free_ = torsion(*this).is_zero();
}

bool Connection::is_symplectic(const SymplecticForm& w) const {
  return on_quotient_ && extends_action_ && torsion_free_ && nabla_omega(*this, w).is_zero();
}

Connection extend_action_connection(const PairPtr& p) {
  const ModuleRep q = quotient_rep(p);
  std::vector<Matrix> ops;
  for (int i = 0; i < p->dim(); ++i)
    ops.push_back(i < p->sub_dim() ? q.matrix(i) : Matrix(q.dim(), q.dim()));
  return Connection(p, std::move(ops));
}

Connection extend_action_connection(const ModuleRep& e) {
  std::vector<Matrix> ops;
  for (int i = 0; i < e.pair()->dim(); ++i)
    ops.push_back(i < e.pair()->sub_dim() ? e.matrix(i) : Matrix(e.dim(), e.dim()));
  return Connection(e, std::move(ops));
}

namespace {

std::vector<Matrix> randomize_complement(std::vector<Matrix> ops, int m, std::mt19937_64& rng, int bound,
                                         int denominator) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, std::max(1, denominator));
  for (std::size_t i = static_cast<std::size_t>(m); i < ops.size(); ++i)
    for (int r = 0; r < ops[i].rows(); ++r)
      for (int c = 0; c < ops[i].cols(); ++c) ops[i](r, c) = Scalar(num(rng), den(rng));
  for (Matrix& op : ops)
    for (int r = 0; r < op.rows(); ++r)
      for (int c = 0; c < op.cols(); ++c) op(r, c).canonicalize();
  return ops;
}

}  // namespace

Connection random_extend_action_connection(const PairPtr& p, std::mt19937_64& rng, int bound, int denominator) {
  return Connection(p, randomize_complement(extend_action_connection(p).ops(), p->sub_dim(), rng, bound, denominator));
}

Connection random_extend_action_connection(const ModuleRep& e, std::mt19937_64& rng, int bound, int denominator) {
  return Connection(e, randomize_complement(extend_action_connection(e).ops(), e.pair()->sub_dim(), rng, bound,
                                            denominator));
}

namespace {

void require_quotient(const Connection& c, const char* what) {
  if (!c.on_quotient()) throw std::invalid_argument(std::string(what) + " needs a connection on the quotient");
}

// Component g of nabla_{e_i} applied to the image of e_j in q.
Scalar apply_on_image(const Connection& c, int i, int j, int g) {
  const int m = c.pair()->sub_dim();
  return j < m ? Scalar(0) : c.op(i)(g, j - m);
}

}  // namespace

SparseTensor torsion(const Connection& c) {
  require_quotient(c, "torsion");
  const LiePair& p = *c.pair();
  const int n = p.dim(), m = p.sub_dim(), d = p.quotient_dim();
  SparseTensor t({n, n, d});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int g = 0; g < d; ++g)
        t.add({i, j, g}, apply_on_image(c, i, j, g) - apply_on_image(c, j, i, g) - p.c(i, j, m + g));
  return t;
}

CochainForm torsion_form(const Connection& c) {
  const LiePair& p = *c.pair();
  const int m = p.sub_dim(), d = p.quotient_dim();
  const SparseTensor t = torsion(c);
  SparseTensor value({d, d, d});
  for (const auto& [idx, v] : t.entries())
    if (idx[0] >= m && idx[1] >= m) value.set({idx[0] - m, idx[1] - m, idx[2]}, v);
  CochainForm out(m, 0, {d, d, d});
  out.add({}, value);
  return out;
}

Matrix curvature(const Connection& c, int i, int j) {
  Matrix r = commutator(c.op(i), c.op(j));
  for (const auto& [k, coeff] : c.pair()->bracket_terms(i, j)) r -= coeff * c.op(k);
  return r;
}

SparseTensor nabla_omega(const Connection& c, const SymplecticForm& w) {
  require_quotient(c, "nabla omega");
  const int n = c.pair()->dim(), d = c.pair()->quotient_dim();
  if (w.dim() != d) throw std::invalid_argument("form and connection over different quotients");
  SparseTensor t({n, d, d});
  const Matrix& om = w.matrix();
  for (int i = 0; i < n; ++i) {
    // -omega(nabla b, c) - omega(b, nabla c)
    const Matrix v = c.op(i).transpose() * om + om * c.op(i);
    for (int b = 0; b < d; ++b)
      for (int g = 0; g < d; ++g) t.add({i, b, g}, -v(b, g));
  }
  return t;
}

CochainForm nabla_omega_form(const Connection& c, const SymplecticForm& w) {
  const int m = c.pair()->sub_dim(), d = c.pair()->quotient_dim();
  SparseTensor value({d, d, d});
  const SparseTensor nw = nabla_omega(c, w);
  for (const auto& [idx, v] : nw.entries())
    if (idx[0] >= m) value.set({idx[0] - m, idx[1], idx[2]}, v);
  CochainForm out(m, 0, {d, d, d});
  out.add({}, value);
  return out;
}

Connection make_torsion_free(const Connection& c) {
  require_quotient(c, "make_torsion_free");
  if (!c.extends_action()) throw MathError("connection does not extend the action");
  const int m = c.pair()->sub_dim();
  const SparseTensor t = torsion(c);
  std::vector<Matrix> ops = c.ops();
  const Scalar half(1, 2);
  for (const auto& [idx, v] : t.entries())
    if (idx[1] >= m) ops[idx[0]](idx[2], idx[1] - m) -= half * v;
  return Connection(c.pair(), std::move(ops));
}

Connection make_symplectic(const Connection& c, const SymplecticForm& w) {
  require_quotient(c, "make_symplectic");
  if (!w.closed()) throw MathError("form is not closed, no symplectic connection exists");
  if (!c.extends_action()) throw MathError("connection does not extend the action");
  if (!c.torsion_free()) throw MathError("connection is not torsion-free");
  const int m = c.pair()->sub_dim(), d = c.pair()->quotient_dim();
  const SparseTensor nw = nabla_omega(c, w);
  const Matrix sharp = w.sharp();
  std::vector<Matrix> ops = c.ops();
  const Scalar third(1, 3);
  for (int b1 = 0; b1 < d; ++b1)
    for (int b2 = 0; b2 < d; ++b2) {
      // xi(x) = (nabla_{b1} omega)(b2, x) + (nabla_{b2} omega)(b1, x)
      Vector xi(d);
      for (int x = 0; x < d; ++x) xi[x] = nw.at({m + b1, b2, x}) + nw.at({m + b2, b1, x});
      const Vector s = sharp * xi;
      for (int g = 0; g < d; ++g) ops[m + b1](g, b2) += third * s[g];
    }
  return Connection(c.pair(), std::move(ops));
}

ModuleRep atiyah_module(const Connection& c) {
  const ModuleRep q = quotient_rep(c.pair());
  return q.dual().tensor(c.target().dual()).tensor(c.target());
}

ModuleRep tilde_module(const PairPtr& p) { return extend_rep(quotient_rep(p), 0, 3); }

CochainForm atiyah_cocycle(const Connection& c) {
  if (!c.extends_action()) throw MathError("connection does not extend the action");
  const LiePair& p = *c.pair();
  const int m = p.sub_dim(), d = p.quotient_dim(), e = c.target_dim();
  CochainForm out(m, 1, {d, e, e});
  for (int a = 0; a < m; ++a) {
    SparseTensor value({d, e, e});
    for (int b = 0; b < d; ++b) {
      const Matrix r = curvature(c, a, m + b);
      for (int in = 0; in < e; ++in)
        for (int o = 0; o < e; ++o) value.set({b, in, o}, r(o, in));
    }
    out.add({a}, value);
  }
  return out;
}

CochainForm tilde_cocycle(const CochainForm& r, const SymplecticForm& w) {
  const int d = w.dim();
  if (r.value_shape() != std::vector<int>{d, d, d}) throw std::invalid_argument("cocycle is not valued in q* (x) q* (x) q");
  SparseTensor flat({d, d});
  for (int g = 0; g < d; ++g)
    for (int b = 0; b < d; ++b) flat.set({g, b}, w.matrix()(g, b));
  CochainForm out(r.dim_h(), r.degree(), {d, d, d});
  const std::array<int, 1> last{2}, first{0};
  for (const auto& [idx, v] : r.components()) out.add(idx, contract(v, last, flat, first));
  return out;
}

CochainForm connection_difference(const Connection& c1, const Connection& c2) {
  if (!c1.extends_action() || !c2.extends_action()) throw MathError("connection does not extend the action");
  if (c1.target_dim() != c2.target_dim() || c1.pair()->dim() != c2.pair()->dim())
    throw std::invalid_argument("connections on different modules");
  const int m = c1.pair()->sub_dim(), d = c1.pair()->quotient_dim(), e = c1.target_dim();
  SparseTensor value({d, e, e});
  for (int b = 0; b < d; ++b) {
    const Matrix diff = c1.op(m + b) - c2.op(m + b);
    for (int in = 0; in < e; ++in)
      for (int o = 0; o < e; ++o) value.set({b, in, o}, diff(o, in));
  }
  CochainForm out(m, 0, {d, e, e});
  out.add({}, value);
  return out;
}

SymmetryDefects symmetry_defects(const Connection& c, const SymplecticForm& w) {
  require_quotient(c, "symmetry_defects");
  const PairPtr& p = c.pair();
  const CochainForm r = atiyah_cocycle(c);
  const CochainForm rt = tilde_cocycle(r, w);
  const Permutation swap23({0, 2, 1}), swap12({1, 0, 2});
  SymmetryDefects out;
  out.lhs23 = rt - rt.permute_values(swap23);
  out.rhs23 = ce_differential(tilde_module(p), Scalar(-1) * nabla_omega_form(c, w));
  out.lhs12 = r - r.permute_values(swap12);
  out.rhs12 = ce_differential(atiyah_module(c), torsion_form(c));
  return out;
}

std::optional<Connection> compatible_connection(const PairPtr& p) {
  const int n = p->dim(), m = p->sub_dim(), d = p->quotient_dim();
  const ModuleRep q = quotient_rep(p);
  std::vector<Matrix> rho;
  for (int a = 0; a < m; ++a) rho.push_back(q.matrix(a));
  // Unknowns: op(m + j)(o, i) at column (j*d + o)*d + i.
  auto var = [&](int j, int o, int i) { return (j * d + o) * d + i; };
  const int cols = (n - m) * d * d;
  const int rows = m * (n - m) * d * d;
  SparseMatrix a(rows, cols);
  Vector rhs(rows);
  int row = 0;
  for (int s = 0; s < m; ++s)
    for (int j = 0; j < n - m; ++j)
      for (int o = 0; o < d; ++o)
        for (int i = 0; i < d; ++i, ++row) {
          // [rho(s), N_l](o, i) - sum_k c_{s l}^k N_k(o, i) = 0 with l = m + j.
          for (int t = 0; t < d; ++t) {
            a.add(row, var(j, t, i), rho[s](o, t));
            a.add(row, var(j, o, t), -rho[s](t, i));
          }
          for (const auto& [k, coeff] : p->bracket_terms(s, m + j)) {
            if (k >= m)
              a.add(row, var(k - m, o, i), -coeff);
            else
              rhs[row] += coeff * rho[k](o, i);
          }
        }
  const auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  std::vector<Matrix> ops = rho;
  for (int j = 0; j < n - m; ++j) {
    Matrix op(d, d);
    for (int o = 0; o < d; ++o)
      for (int i = 0; i < d; ++i) op(o, i) = (*x)[var(j, o, i)];
    ops.push_back(op);
  }
  return Connection(p, std::move(ops));
}

ModuleRep psi_module(const PairPtr& p) {
  const ModuleRep q = quotient_rep(p);
  return extend_rep(q, 0, 3).tensor(q);
}

CochainForm bianchi_psi(const Connection& c, const SymplecticForm* w) {
  require_quotient(c, "bianchi_psi");
  const int m = c.pair()->sub_dim(), d = c.pair()->quotient_dim();
  const CochainForm r = atiyah_cocycle(c);
  // rv[a][b1][b2][g] = R(a)(b1, b2)^g
  std::vector<std::vector<Scalar>> rv(m, std::vector<Scalar>(static_cast<std::size_t>(d) * d * d));
  auto at = [d](int b1, int b2, int g) { return (static_cast<std::size_t>(b1) * d + b2) * d + g; };
  for (const auto& [idx1, value] : r.components())
    for (const auto& [idx, v] : value.entries()) rv[idx1[0]][at(idx[0], idx[1], idx[2])] = v;

  CochainForm psi(m, 2, {d, d, d, d});
  for (int a1 = 0; a1 < m; ++a1)
    for (int a2 = a1 + 1; a2 < m; ++a2) {
      SparseTensor value({d, d, d, d});
      for (int b1 = 0; b1 < d; ++b1)
        for (int b2 = 0; b2 < d; ++b2)
          for (int b3 = 0; b3 < d; ++b3)
            for (int g = 0; g < d; ++g) {
              Scalar s = 0;
              for (int t = 0; t < d; ++t) {
                // The first-written R takes a1, the nested one a2, minus the swap.
                s += rv[a1][at(b1, t, g)] * rv[a2][at(b2, b3, t)] - rv[a2][at(b1, t, g)] * rv[a1][at(b2, b3, t)];
                s += rv[a1][at(t, b3, g)] * rv[a2][at(b1, b2, t)] - rv[a2][at(t, b3, g)] * rv[a1][at(b1, b2, t)];
                s += rv[a1][at(b2, t, g)] * rv[a2][at(b1, b3, t)] - rv[a2][at(b2, t, g)] * rv[a1][at(b1, b3, t)];
              }
              value.add({b1, b2, b3, g}, s);
            }
      psi.add({a1, a2}, value);
    }
  if (!w) return psi;
  SparseTensor flat({d, d});
  for (int g = 0; g < d; ++g)
    for (int b = 0; b < d; ++b) flat.set({g, b}, w->matrix()(g, b));
  CochainForm lowered(m, 2, {d, d, d, d});
  const std::array<int, 1> last{3}, first{0};
  for (const auto& [idx, v] : psi.components()) lowered.add(idx, contract(v, last, flat, first));
  return lowered;
}

}  // namespace rwpair
