#include "support.hpp"
#include "rwpair/errors.hpp"

#include <doctest.h>

using namespace testing;

namespace {

// [e1, e2] = e0 and [e0, e1] = e1: the Jacobi sum on (e0, e1, e2) is -e0.
StructureConstants broken_jacobi() {
  StructureConstants g(3);
  g.set_bracket(1, 2, 0, 1);
  g.set_bracket(0, 1, 1, 1);
  return g;
}

// Heisenberg (z, x, y) plus a central w.
StructureConstants heisenberg_plus_line() {
  StructureConstants g(4);
  g.set_bracket(1, 2, 0, 1);
  return g;
}

PairPtr whole(const StructureConstants& g) { return std::make_shared<const LiePair>(g, g.dim()); }

std::vector<int> betti(const ModuleRep& rep) {
  std::vector<int> out;
  for (int k = 0; k <= rep.pair()->sub_dim(); ++k) out.push_back(cohomology(rep, k).dim);
  return out;
}

CochainForm random_cochain(std::mt19937_64& rng, const ModuleRep& rep, int degree) {
  CochainForm f(rep.pair()->sub_dim(), degree, rep.shape());
  for (const FormIndex& t : increasing_tuples(rep.pair()->sub_dim(), degree)) f.add(t, random_tensor(rng, rep.shape()));
  return f;
}

// (d eta)(a0, a1) = a0 . eta(a1) - a1 . eta(a0) - eta([a0, a1]) for a vector-valued 1-form.
Vector d_one_form(const ModuleRep& rep, const std::vector<Vector>& eta, int a0, int a1) {
  const LiePair& p = *rep.pair();
  const Matrix m0 = rep.matrix(a0), m1 = rep.matrix(a1);
  Vector out = m0 * eta[a1];
  const Vector t = m1 * eta[a0];
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= t[i];
  for (int k = 0; k < p.sub_dim(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= p.c(a0, a1, k) * eta[k][i];
  return out;
}

}  // namespace

TEST_CASE("catalog pairs satisfy the pair axioms") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    CHECK(validate_pair(*e.pair).ok());
    CHECK(check_symplectic(*e.pair, e.omega.matrix()).ok());
    CHECK_FALSE(quotient_rep(e.pair).flatness_defect().has_value());
  }
  CHECK(catalog_names() == std::vector<std::string>{"abelian4", "heisenberg", "sl2-nilp", "sl3-min"});
  CHECK_THROWS_AS(catalog_entry("sl4"), std::invalid_argument);
}

TEST_CASE("catalog dimensions") {
  CHECK(catalog_entry("sl2-nilp").pair->sub_dim() == 1);
  CHECK(catalog_entry("sl3-min").pair->sub_dim() == 4);
  CHECK(catalog_entry("sl3-min").pair->quotient_dim() == 4);
  CHECK(catalog_entry("heisenberg").pair->quotient_dim() == 2);
}

TEST_CASE("validation reports the first failing basis tuple") {
  SUBCASE("jacobi") {
    const PairReport r = validate_pair(LiePair(broken_jacobi(), 0));
    CHECK(r.antisymmetry.passed);
    CHECK_FALSE(r.jacobi.passed);
    CHECK(r.jacobi.witness == std::vector<int>{0, 1, 2});
  }
  SUBCASE("closure") {
    // h = span{E12, E21} in sl(2) is not closed: [E12, E21] = H.
    const PairReport r = validate_pair(LiePair(special_linear(2).constants, 2));
    CHECK(r.jacobi.passed);
    CHECK_FALSE(r.closure.passed);
    CHECK(r.closure.witness == std::vector<int>{0, 1, 2});
  }
  SUBCASE("antisymmetry") {
    StructureConstants g = special_linear(2).constants;
    g.set_raw(1, 0, 2, 5);
    const PairReport r = validate_pair(LiePair(g, 1));
    CHECK_FALSE(r.antisymmetry.passed);
    CHECK(r.antisymmetry.witness == std::vector<int>{0, 1});
  }
}

TEST_CASE("sl(3) structure constants reproduce matrix commutators") {
  const MatrixLieAlgebra alg = special_linear(3);
  REQUIRE(alg.basis.size() == 8);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Matrix expect(3, 3);
      for (int k = 0; k < 8; ++k) expect += alg.constants(i, j, k) * alg.basis[k];
      CHECK(expect == commutator(alg.basis[i], alg.basis[j]));
    }
  CHECK(alg.names[1] == "E13");
  CHECK(validate_pair(LiePair(alg.constants, 0)).ok());
}

TEST_CASE("quotient representation and module operations") {
  const CatalogEntry e = catalog_entry("sl3-min");
  const ModuleRep q = quotient_rep(e.pair);
  const int m = e.pair->sub_dim();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < 4; ++b)
      for (int g = 0; g < 4; ++g) CHECK(q.matrix(a)(g, b) == e.pair->c(a, m + b, m + g));
  const ModuleRep dual = q.dual();
  const ModuleRep both = q.tensor(dual);
  CHECK(both.shape() == std::vector<int>{4, 4});
  for (int a = 0; a < m; ++a) {
    CHECK(dual.matrix(a) == Scalar(-1) * q.matrix(a).transpose());
    // Kronecker oracle: A (x) I + I (x) B.
    const Matrix a1 = q.matrix(a), b1 = dual.matrix(a), big = both.matrix(a);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            const Scalar expect = (j == l ? a1(i, k) : Scalar(0)) + (i == k ? b1(j, l) : Scalar(0));
            CHECK(big(i * 4 + j, k * 4 + l) == expect);
          }
  }
  CHECK_FALSE(both.flatness_defect().has_value());
  CHECK(extend_rep(q, 1, 2).shape() == std::vector<int>{4, 4, 4});
}

TEST_CASE("module action on tensors matches the dense matrix") {
  std::mt19937_64 rng(22);
  const CatalogEntry e = catalog_entry("sl3-min");
  const ModuleRep rep = extend_rep(quotient_rep(e.pair), 1, 1);
  const SparseTensor v = random_tensor(rng, rep.shape());
  Vector flat(16);
  for (const auto& [i, x] : v.entries()) flat[i[0] * 4 + i[1]] = x;
  for (int a = 0; a < 4; ++a) {
    const Vector expect = rep.matrix(a) * flat;
    const SparseTensor got = rep.act(a, v);
    for (int i = 0; i < 16; ++i) CHECK(got.at({i / 4, i % 4}) == expect[i]);
  }
}

TEST_CASE("broken module is detected by the flatness check") {
  const PairPtr p = catalog_entry("sl3-min").pair;
  std::vector<Matrix> action;
  for (int a = 0; a < 4; ++a) action.push_back(Matrix::identity(2) * Scalar(a));
  // An abelian image cannot represent the nonabelian h.
  const ModuleRep bad(p, 2, action);
  CHECK(bad.flatness_defect().has_value());
}

TEST_CASE("Chevalley-Eilenberg differential squares to zero") {
  std::mt19937_64 rng(23);
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    const ModuleRep q = quotient_rep(e.pair);
    for (const ModuleRep& rep : {ModuleRep(e.pair), q, extend_rep(q, 1, 2)})
      for (int k = 0; k + 2 <= e.pair->sub_dim(); ++k) {
        const CochainForm f = random_cochain(rng, rep, k);
        CHECK(ce_differential(rep, ce_differential(rep, f)).is_zero());
      }
  }
}

TEST_CASE("differential of a one-form matches the explicit formula") {
  std::mt19937_64 rng(24);
  const CatalogEntry e = catalog_entry("sl3-min");
  const ModuleRep q = quotient_rep(e.pair);
  const CochainForm eta = random_cochain(rng, q, 1);
  std::vector<Vector> dense(4, Vector(4));
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 4; ++i) dense[a][i] = eta.at({a}).at({i});
  const CochainForm d = ce_differential(q, eta);
  for (int a0 = 0; a0 < 4; ++a0)
    for (int a1 = a0 + 1; a1 < 4; ++a1) {
      const Vector expect = d_one_form(q, dense, a0, a1);
      for (int i = 0; i < 4; ++i) CHECK(d.at({a0, a1}).at({i}) == expect[i]);
    }
  // The sparse matrix of d agrees with applying d.
  const SparseMatrix dm = differential_matrix(q, 1);
  CHECK(dm * eta.to_vector() == d.to_vector());
}

TEST_CASE("cohomology of known Lie algebras") {
  CHECK(betti(ModuleRep(whole(special_linear(2).constants))) == std::vector<int>{1, 0, 0, 1});
  StructureConstants heis(3);
  heis.set_bracket(1, 2, 0, 1);
  CHECK(betti(ModuleRep(whole(heis))) == std::vector<int>{1, 2, 2, 1});
  CHECK(betti(ModuleRep(whole(StructureConstants(3)))) == std::vector<int>{1, 3, 3, 1});
  // Whitehead: H^1(sl2, V) = 0 for the adjoint module.
  const PairPtr sl2 = whole(special_linear(2).constants);
  std::vector<Matrix> ad;
  for (int a = 0; a < 3; ++a) {
    Vector e(3);
    e[a] = 1;
    ad.push_back(sl2->algebra().ad(e));
  }
  const ModuleRep adjoint(sl2, 3, ad);
  CHECK(cohomology(adjoint, 0).dim == 0);
  CHECK(cohomology(adjoint, 1).dim == 0);
  CHECK(cohomology(adjoint, 2).dim == 0);
}

TEST_CASE("coboundary solving returns verified primitives") {
  std::mt19937_64 rng(25);
  const CatalogEntry e = catalog_entry("sl3-min");
  const ModuleRep rep = extend_rep(quotient_rep(e.pair), 0, 2);
  const CochainForm eta = random_cochain(rng, rep, 1);
  const CochainForm z = ce_differential(rep, eta);
  const auto phi = is_coboundary(rep, z);
  REQUIRE(phi.has_value());
  CHECK(ce_differential(rep, *phi) == z);
  CHECK(class_equal(rep, z, CochainForm(4, 2, rep.shape())));
  const CochainForm f = random_cochain(rng, rep, 2);
  if (!ce_differential(rep, f).is_zero()) CHECK_THROWS_AS(is_coboundary(rep, f), std::invalid_argument);
}

TEST_CASE("class coordinates separate cohomology classes") {
  const PairPtr heis = [] {
    StructureConstants g(3);
    g.set_bracket(1, 2, 0, 1);
    return whole(g);
  }();
  const ModuleRep triv(heis);
  const CohomologyInfo info = cohomology(triv, 1);
  REQUIRE(info.dim == 2);
  for (int t = 0; t < 2; ++t) {
    const Vector c = class_coordinates(triv, info, info.basis[t]);
    CHECK(c == Vector{t == 0 ? 1 : 0, t == 1 ? 1 : 0});
  }
  // dz* is exact, so adding it leaves the class unchanged.
  CochainForm dz1(3, 1, {});
  dz1.add({0}, SparseTensor::scalar(1));
  const CochainForm exact = ce_differential(triv, dz1);
  CHECK_FALSE(exact.is_zero());
  const CohomologyInfo info2 = cohomology(triv, 2);
  CHECK(class_coordinates(triv, info2, info2.basis[0] + exact) == class_coordinates(triv, info2, info2.basis[0]));
}

TEST_CASE("symplectic form checks report witnesses") {
  SUBCASE("degenerate") {
    const PairPtr p = catalog_entry("abelian4").pair;
    const Matrix w = Matrix::from_rows({{0, 0}, {0, 0}});
    const SymplecticReport r = check_symplectic(*p, w);
    CHECK_FALSE(r.nondegenerate);
    REQUIRE(r.kernel_witness.has_value());
    CHECK(r.kernel_witness->size() == 2);
    CHECK_THROWS_AS(SymplecticForm(p, w), std::invalid_argument);
  }
  SUBCASE("not antisymmetric") {
    const PairPtr p = catalog_entry("abelian4").pair;
    const SymplecticReport r = check_symplectic(*p, Matrix::from_rows({{1, 1}, {-1, 0}}));
    CHECK_FALSE(r.antisymmetric);
    CHECK(r.antisymmetry_witness == std::array<int, 2>{0, 0});
  }
  SUBCASE("not closed") {
    // omega(x, y) = omega(z, w) = 1 on Heisenberg + line: d omega(x, y, w) = -omega(z, w).
    const PairPtr p = std::make_shared<const LiePair>(heisenberg_plus_line(), 0);
    Matrix w(4, 4);
    w(1, 2) = 1;
    w(2, 1) = -1;
    w(0, 3) = 1;
    w(3, 0) = -1;
    const SymplecticReport r = check_symplectic(*p, w);
    CHECK(r.nondegenerate);
    CHECK_FALSE(r.closed);
    CHECK(r.closedness_witness == std::array<int, 3>{1, 2, 3});
    CHECK_FALSE(SymplecticForm(p, w).closed());
  }
  SUBCASE("odd dimension") {
    const PairPtr p = std::make_shared<const LiePair>(StructureConstants(3), 0);
    CHECK_FALSE(check_symplectic(*p, Matrix(3, 3)).even_dimension);
  }
}

TEST_CASE("inverse form conventions") {
  const CatalogEntry e = catalog_entry("sl3-min");
  const Matrix& w = e.omega.matrix();
  CHECK(w * e.omega.inverse_matrix() == Matrix::identity(4));
  CHECK(e.omega.flat() * e.omega.sharp() == Matrix::identity(4));
}

TEST_CASE("presymplectic forms reduce to symplectic pairs") {
  Matrix big(4, 4);
  big(1, 2) = 1;
  big(2, 1) = -1;
  const ReducedPair r = presymplectic_to_pair(heisenberg_plus_line(), big);
  CHECK(r.pair->sub_dim() == 2);
  CHECK(validate_pair(*r.pair).ok());
  CHECK(r.omega.closed());
  // The kernel z, w spans h: the basis columns 0 and 1 are e_0 and e_3.
  CHECK(r.basis(0, 0) == 1);
  CHECK(r.basis(3, 1) == 1);
  Matrix open = big;
  open(0, 3) = 1;
  open(3, 0) = -1;
  try {
    presymplectic_to_pair(heisenberg_plus_line(), open);
    FAIL("expected a closedness failure");
  } catch (const MathError& err) {
    CHECK(err.witness() == std::vector<int>{1, 2, 3});
  }
}

TEST_CASE("coadjoint orbit pairs") {
  const MatrixLieAlgebra sl3 = special_linear(3);
  Matrix regular(3, 3);
  regular(0, 1) = 1;
  regular(1, 2) = 1;
  const ReducedPair r = coadjoint_pair(sl3.constants, sl3.coordinates(regular), sl3.trace_form);
  CHECK(r.pair->sub_dim() == 2);
  CHECK(validate_pair(*r.pair).ok());
  CHECK(r.omega.closed());
  Matrix diag(3, 3);
  diag(0, 0) = 1;
  diag(2, 2) = -1;
  CHECK(coadjoint_pair(sl3.constants, sl3.coordinates(diag), sl3.trace_form).pair->sub_dim() == 2);
  CHECK_THROWS_AS(coadjoint_pair(sl3.constants, sl3.coordinates(diag), Matrix::identity(8)), std::invalid_argument);
}
