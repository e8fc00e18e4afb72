#include "support.hpp"
#include "rwpair/errors.hpp"
#include "rwpair/weight.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace testing;

namespace {

struct Setup {
  CatalogEntry entry;
  Connection connection;
  ModuleRep trivial;
};

Setup sl3_setup(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CatalogEntry e = catalog_entry("sl3-min");
  Connection c = random_symplectic(e, rng);
  ModuleRep trivial(e.pair);
  return {std::move(e), std::move(c), std::move(trivial)};
}

// Bivector entry (x, y) recomputed from the inverse-form components.
Scalar bivector(const SymplecticForm& w, int x, int y) { return w.inverse_matrix()(y, x); }

// Lowered curvature R~(a)[b1][b2][b3] straight from the curvature matrices.
Scalar lowered(const Connection& c, const SymplecticForm& w, int a, int b1, int b2, int b3) {
  const int m = c.pair()->sub_dim();
  const Matrix k = curvature(c, a, m + b1);
  Scalar s = 0;
  for (int g = 0; g < w.dim(); ++g) s += k(g, b2) * w.matrix()(g, b3);
  return s;
}

// Order-1 weight by a plain index sum: every edge carries a pair of indices.
CochainForm order_one_oracle(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d,
                             const AdmissibleChoices& ch) {
  const int m = c.pair()->sub_dim(), q = w.dim();
  CochainForm out(m, 2, {});
  for (int a1 = 0; a1 < m; ++a1)
    for (int a2 = a1 + 1; a2 < m; ++a2) {
      Scalar total = 0;
      for (const auto& args : {std::array<int, 2>{a1, a2}, std::array<int, 2>{a2, a1}}) {
        const int sign = args[0] == a1 ? 1 : -1;
        for (int code = 0; code < q * q * q * q * q * q; ++code) {
          std::vector<int> flag_index(6);
          Scalar weight = 1;
          int rest = code;
          for (int e = 0; e < 3; ++e) {
            const int x = rest % q, y = rest / q % q;
            rest /= q * q;
            flag_index[ch.rep.edges[e][0]] = x;
            flag_index[ch.rep.edges[e][1]] = y;
            weight *= bivector(w, x, y);
          }
          if (weight == 0) continue;
          for (int j = 0; j < 2; ++j) {
            const auto& f = ch.vertex_flags[ch.rep.vertex_order[j]];
            weight *= lowered(c, w, args[j], flag_index[f[0]], flag_index[f[1]], flag_index[f[2]]);
          }
          total += sign * weight;
        }
      }
      if (total != 0) out.add({a1, a2}, SparseTensor::scalar(total));
    }
  return out;
}

// Chord weight as an antisymmetrized sum of traces of curvature products.
CochainForm chord_oracle(const Connection& c, const SymplecticForm& w, const ChordDiagram& cd, int origin) {
  const int m = c.pair()->sub_dim(), q = w.dim(), n = cd.points, k = cd.order();
  const ChordOrder order = chord_vertex_order(cd, origin);
  CochainForm out(m, n, {});
  for (const FormIndex& idx : increasing_tuples(m, n)) {
    Scalar total = 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> inv = perm;
      const int sign = sort_sign(inv);
      int codes = 1;
      for (int t = 0; t < 2 * k; ++t) codes *= q;
      for (int code = 0; code < codes; ++code) {
        std::vector<int> slot(n);
        Scalar weight = 1;
        int rest = code;
        for (int t = 0; t < k; ++t) {
          const int x = rest % q, y = rest / q % q;
          rest /= q * q;
          slot[order.chord_vertices[t][0]] = x;
          slot[order.chord_vertices[t][1]] = y;
          weight *= bivector(w, x, y);
        }
        if (weight == 0) continue;
        Matrix prod = Matrix::identity(c.target_dim());
        for (int j = 0; j < n; ++j) prod = prod * curvature(c, idx[perm[j]], m + slot[j]);
        Scalar tr = 0;
        for (int i = 0; i < prod.rows(); ++i) tr += prod(i, i);
        total += sign * weight * tr;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (total != 0) out.add(idx, SparseTensor::scalar(total));
  }
  return out;
}

}  // namespace

TEST_CASE("edge bivector inverts the symplectic form") {
  for (const CatalogEntry& e : catalog()) {
    const Matrix b = edge_bivector(e.omega);
    const Matrix& w = e.omega.matrix();
    for (int x = 0; x < w.rows(); ++x)
      for (int y = 0; y < w.rows(); ++y) {
        CHECK(b(x, y) == -b(y, x));
        Scalar s = 0;
        for (int g = 0; g < w.rows(); ++g) s += w(x, g) * b(y, g);
        CHECK(s == (x == y ? 1 : 0));
      }
  }
}

TEST_CASE("order-one weights match a direct index sum") {
  std::mt19937_64 rng(51);
  const Setup s = sl3_setup(52);
  for (const TrivalentDiagram& d : enumerate_trivalent(1))
    for (int trial = 0; trial < 3; ++trial) {
      const AdmissibleChoices ch = trial == 0 ? default_choices(d) : random_choices(d, rng);
      const CochainForm expected = order_one_oracle(s.connection, s.entry.omega, d, ch);
      CHECK(weight_cocycle(s.connection, s.entry.omega, d, ch) == expected);
    }
}

TEST_CASE("dense contraction agrees with the tensor network on the theta graph") {
  std::mt19937_64 rng(53);
  const Setup s = sl3_setup(54);
  const TrivalentDiagram theta = theta_diagram();
  const CochainForm net = weight_cocycle(s.connection, s.entry.omega, theta);
  CHECK_FALSE(net.is_zero());
  CHECK(weight_cocycle_dense(s.connection, s.entry.omega, theta) == net);
  for (int trial = 0; trial < 3; ++trial) {
    const AdmissibleChoices ch = random_choices(theta, rng);
    CHECK(weight_cocycle_dense(s.connection, s.entry.omega, theta, ch) == net);
  }
  for (const TrivalentDiagram& d : enumerate_trivalent(1))
    CHECK(weight_cocycle_dense(s.connection, s.entry.omega, d) == weight_cocycle(s.connection, s.entry.omega, d));
}

TEST_CASE("weights are closed and independent of admissible choices") {
  std::mt19937_64 rng(55);
  const Setup s = sl3_setup(56);
  for (int k = 1; k <= 2; ++k)
    for (const TrivalentDiagram& d : enumerate_trivalent(k)) {
      const CochainForm base = weight_cocycle(s.connection, s.entry.omega, d);
      CHECK(base.degree() == 2 * k);
      CHECK(ce_differential(s.trivial, base).is_zero());
      for (int trial = 0; trial < 10; ++trial)
        CHECK(weight_cocycle(s.connection, s.entry.omega, d, random_choices(d, rng)) == base);
      if (d.has_self_loop()) CHECK(base.is_zero());
    }
}

TEST_CASE("weight classes do not depend on the symplectic connection") {
  const Setup s1 = sl3_setup(57), s2 = sl3_setup(58);
  const TrivalentDiagram theta = theta_diagram();
  const CochainForm w1 = weight_cocycle(s1.connection, s1.entry.omega, theta);
  const CochainForm w2 = weight_cocycle(s2.connection, s2.entry.omega, theta);
  CHECK_FALSE(w1 == w2);
  CHECK(class_equal(s1.trivial, w1, w2));
  const WeightClass wc = weight_class(s1.connection, s1.entry.omega, theta);
  CHECK(wc.cocycle == w1);
  CHECK(wc.cohomology.dim == 0);
  CHECK(wc.coordinates.size() == 0);
}

TEST_CASE("orders beyond half the subalgebra dimension give the zero form") {
  const Setup s = sl3_setup(59);
  for (const TrivalentDiagram& d : enumerate_trivalent(3)) {
    const CochainForm w = weight_cocycle(s.connection, s.entry.omega, d);
    CHECK(w.is_zero());
    CHECK(w.degree() == 6);
  }
  std::mt19937_64 rng(60);
  for (const char* name : {"heisenberg", "sl2-nilp"}) {
    const CatalogEntry e = catalog_entry(name);
    CHECK(weight_cocycle(random_symplectic(e, rng), e.omega, theta_diagram()).is_zero());
  }
  const CatalogEntry flat = catalog_entry("abelian4");
  for (const TrivalentDiagram& d : enumerate_trivalent(1))
    CHECK(weight_cocycle(standard_symplectic(flat), flat.omega, d).is_zero());
}

TEST_CASE("weights need a connection on the quotient extending the action") {
  const CatalogEntry e = catalog_entry("sl3-min");
  const Connection broken(e.pair, std::vector<Matrix>(e.pair->dim(), Matrix(4, 4)));
  CHECK_THROWS_AS(weight_cocycle(broken, e.omega, theta_diagram()), MathError);
  const Connection on_line = extend_action_connection(ModuleRep(e.pair));
  CHECK_THROWS(weight_cocycle(on_line, e.omega, theta_diagram()));
}

TEST_CASE("reversing one vertex negates the weight") {
  const Setup s = sl3_setup(61);
  for (int k = 1; k <= 2; ++k)
    for (const TrivalentDiagram& d : enumerate_trivalent(k)) CHECK(check_AS(s.connection, s.entry.omega, d));
  const auto [theta, flipped] = as_pair(theta_diagram(), 0);
  const CochainForm w = weight_cocycle(s.connection, s.entry.omega, theta);
  CHECK_FALSE(w.is_zero());
  CHECK(weight_cocycle(s.connection, s.entry.omega, flipped) == Scalar(-1) * w);
}

TEST_CASE("IHX combinations are exact for every internal edge of order two") {
  const Setup s = sl3_setup(62);
  int edges = 0;
  for (const TrivalentDiagram& d : enumerate_trivalent(2))
    for (int e = 0; e < d.num_edges(); ++e) {
      if (d.flag_vertex[d.edges[e][0]] == d.flag_vertex[d.edges[e][1]]) continue;
      const IhxResult r = ihx_combination(s.connection, s.entry.omega, d, e);
      CHECK(r.closed);
      CHECK(r.exact);
      CHECK(check_IHX(s.connection, s.entry.omega, d, e));
      ++edges;
    }
  CHECK(edges > 0);
  for (int e = 0; e < 3; ++e) CHECK(check_IHX(s.connection, s.entry.omega, theta_diagram(), e));
}

TEST_CASE("local IHX tensors reproduce the lowered Bianchi form") {
  const Setup s = sl3_setup(63);
  const IhxLocalTensors t = ihx_local_tensors(s.connection, s.entry.omega);
  CHECK_FALSE(t.combination().is_zero());
  CHECK(t.combination() == t.psi_lowered);
  REQUIRE(t.phi.has_value());
  REQUIRE(t.d_phi_lowered.has_value());
  CHECK(*t.d_phi_lowered == t.psi_lowered);
  CHECK(t.identity_holds());

  const CochainForm r = atiyah_cocycle(s.connection);
  int checked = 0;
  for (int a1 = 0; a1 < 4; ++a1)
    for (int a2 = a1 + 1; a2 < 4; ++a2)
      for (int code = 0; code < 256; ++code) {
        const std::array<int, 4> b{code & 3, code >> 2 & 3, code >> 4 & 3, code >> 6 & 3};
        CHECK(t.delta_i.at({a1, a2}).at({b[0], b[1], b[2], b[3]}) ==
              double_bracket_pairing(r, s.entry.omega, a1, a2, b));
        ++checked;
      }
  CHECK(checked == 6 * 256);
}

TEST_CASE("flat connections have vanishing local tensors") {
  const CatalogEntry e = catalog_entry("abelian4");
  const IhxLocalTensors t = ihx_local_tensors(standard_symplectic(e), e.omega);
  CHECK(t.delta_i.is_zero());
  CHECK(t.delta_h.is_zero());
  CHECK(t.delta_x.is_zero());
  CHECK(t.identity_holds());
}

TEST_CASE("chord weights match traces of curvature products") {
  const Setup s = sl3_setup(64);
  for (int k = 1; k <= 2; ++k)
    for (const ChordDiagram& cd : enumerate_chord(k))
      for (int origin = 0; origin < cd.points; ++origin)
        CHECK(chord_weight(s.connection, s.entry.omega, cd, origin) ==
              chord_oracle(s.connection, s.entry.omega, cd, origin));
}

TEST_CASE("chord weights are closed and the single chord class ignores the origin") {
  const Setup s = sl3_setup(65);
  const ChordDiagram single{2, {{0, 1}}};
  const CochainForm w0 = chord_weight(s.connection, s.entry.omega, single, 0);
  const CochainForm w1 = chord_weight(s.connection, s.entry.omega, single, 1);
  CHECK_FALSE(w0.is_zero());
  CHECK(class_equal(s.trivial, w0, w1));
  for (int k = 1; k <= 2; ++k)
    for (const ChordDiagram& cd : enumerate_chord(k))
      CHECK(ce_differential(s.trivial, chord_weight(s.connection, s.entry.omega, cd)).is_zero());
}

TEST_CASE("chord weights vanish for flat modules") {
  const CatalogEntry e = catalog_entry("sl3-min");
  const Connection line = extend_action_connection(ModuleRep(e.pair));
  for (int k = 1; k <= 2; ++k)
    for (const ChordDiagram& cd : enumerate_chord(k)) CHECK(chord_weight(line, e.omega, cd).is_zero());
  const CatalogEntry flat = catalog_entry("abelian4");
  for (const ChordDiagram& cd : enumerate_chord(1))
    CHECK(chord_weight(standard_symplectic(flat), flat.omega, cd).is_zero());
}

TEST_CASE("4T combinations are exact on sl(3)") {
  const Setup s = sl3_setup(66);
  for (const FourTQuadruple& q : four_t_quadruples(2)) {
    const FourTResult r = four_t_combination(s.connection, s.entry.omega, q);
    CHECK(r.exact);
    CHECK(ce_differential(s.trivial, r.combination).is_zero());
  }
  FourTQuadruple bad = four_t_quadruples(2).front();
  std::swap(bad.diagrams[1], bad.diagrams[2]);
  if (!(bad.diagrams[1] == bad.diagrams[2])) CHECK_THROWS_AS(check_4T(s.connection, s.entry.omega, bad), std::invalid_argument);
}

TEST_CASE("deframed weights vanish in cohomology on isolated chords") {
  const Setup s = sl3_setup(67);
  const ChordDiagram single{2, {{0, 1}}};
  CHECK(deframed_chord_weight(s.connection, s.entry.omega, single).is_zero());
  int isolated = 0;
  for (int k = 1; k <= 3; ++k)
    for (const ChordDiagram& cd : enumerate_chord(k))
      if (has_isolated_chord(cd)) {
        CHECK(check_1T(s.connection, s.entry.omega, cd));
        ++isolated;
      }
  CHECK(isolated == 1 + 1 + 3);
}

TEST_CASE("deframing formula on explicit forms") {
  // Two chords: w(D) - s ^ w(D|{1}) - s ^ w(D|{0}) + s ^ s.
  std::mt19937_64 rng(68);
  const int m = 4;
  auto random_form = [&](int degree) {
    CochainForm f(m, degree, {});
    for (const FormIndex& idx : increasing_tuples(m, degree)) f.add(idx, SparseTensor::scalar(random_scalar(rng)));
    return f;
  };
  CochainForm one(m, 0, {});
  one.add({}, SparseTensor::scalar(1));
  const CochainForm s = random_form(2), w0 = random_form(2), w1 = random_form(2), w01 = random_form(4);
  const CochainForm expected = w01 - cup(s, w0) - cup(s, w1) + cup(s, s);
  CHECK(deframe({one, w0, w1, w01}, s, 2) == expected);
  CHECK_THROWS_AS(deframe({one, w0}, s, 2), std::invalid_argument);
}

TEST_CASE("cup product is graded commutative") {
  std::mt19937_64 rng(69);
  const int m = 5;
  auto random_form = [&](int degree) {
    CochainForm f(m, degree, {});
    for (const FormIndex& idx : increasing_tuples(m, degree))
      if (rng() % 2) f.add(idx, SparseTensor::scalar(random_scalar(rng)));
    return f;
  };
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= m; ++q) {
      const CochainForm a = random_form(p), b = random_form(q);
      const Scalar sign = (p * q) % 2 ? -1 : 1;
      CHECK(cup(a, b) == sign * cup(b, a));
    }
  CochainForm valued(m, 1, {2});
  CHECK_THROWS_AS(cup(valued, random_form(1)), std::invalid_argument);
}
