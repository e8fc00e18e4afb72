#include "rwpair/weight.hpp"

#include "rwpair/errors.hpp"
#include "rwpair/tensor_network.hpp"

#include <functional>
#include <stdexcept>

namespace rwpair {

namespace {

using MultilinearValue = std::function<Scalar(const std::vector<int>&)>;

// Full antisymmetrization of a multilinear scalar function of `degree`
// arguments in h, without factorial normalization.
CochainForm antisymmetrize(int dim_h, int degree, const MultilinearValue& value) {
  CochainForm out(dim_h, degree, {});
  if (degree > dim_h) return out;
  const std::vector<Permutation> perms = all_permutations(degree);
  std::vector<int> args(degree);
  for (const FormIndex& tuple : increasing_tuples(dim_h, degree)) {
    Scalar total = 0;
    for (const Permutation& s : perms) {
      for (int j = 0; j < degree; ++j) args[j] = tuple[s(j)];
      const Scalar v = value(args);
      if (!rwpair::is_zero(v)) total += s.sign() > 0 ? v : Scalar(-v);
    }
    if (!rwpair::is_zero(total)) out.add(tuple, SparseTensor::scalar(total));
  }
  return out;
}

SparseTensor matrix_tensor(const Matrix& m) {
  SparseTensor t({m.rows(), m.cols()});
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t.set({r, c}, m(r, c));
  return t;
}

void require_quotient(const Connection& c) {
  if (!c.pair()) throw std::invalid_argument("connection without a pair");
  if (!c.on_quotient()) throw std::invalid_argument("weights of trivalent diagrams need a connection on q");
}

// Per basis vector of h, the lowered Atiyah cocycle as a (q*)^3 tensor.
std::vector<SparseTensor> vertex_tensors(const Connection& c, const SymplecticForm& w) {
  const CochainForm rt = tilde_cocycle(atiyah_cocycle(c), w);
  std::vector<SparseTensor> out;
  for (int a = 0; a < rt.dim_h(); ++a) out.push_back(rt.at({a}));
  return out;
}

AdmissibleChoices checked_choices(const TrivalentDiagram& d, const std::optional<AdmissibleChoices>& choices) {
  AdmissibleChoices ch = choices ? *choices : default_choices(d);
  admissible_permutation(d, ch);
  return ch;
}

ModuleRep trivial_module(const Connection& c) { return ModuleRep(c.pair()); }

bool exact_in(const ModuleRep& rep, const CochainForm& z) {
  if (z.is_zero()) return true;
  if (!ce_differential(rep, z).is_zero()) return false;
  return is_coboundary(rep, z).has_value();
}

}  // namespace

Matrix edge_bivector(const SymplecticForm& w) { return w.sharp(); }

CochainForm weight_cocycle(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d,
                           const std::optional<AdmissibleChoices>& choices) {
  require_quotient(c);
  d.validate();
  const AdmissibleChoices ch = checked_choices(d, choices);
  const int m = c.pair()->sub_dim();
  const std::vector<SparseTensor> rt = vertex_tensors(c, w);
  const SparseTensor bivector = matrix_tensor(edge_bivector(w));
  // Network labels are flag ids; every flag occurs once at its vertex and
  // once on its edge.
  return antisymmetrize(m, d.num_vertices, [&](const std::vector<int>& args) {
    TensorNetwork net;
    for (int j = 0; j < d.num_vertices; ++j) {
      const SparseTensor& t = rt[args[j]];
      if (t.is_zero()) return Scalar(0);
      const auto& flags = ch.vertex_flags[ch.rep.vertex_order[j]];
      net.add(t, {flags[0], flags[1], flags[2]});
    }
    for (const auto& e : ch.rep.edges) net.add(bivector, {e[0], e[1]});
    return net.contract().value();
  });
}

CochainForm weight_cocycle_dense(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d,
                                 const std::optional<AdmissibleChoices>& choices) {
  require_quotient(c);
  d.validate();
  const AdmissibleChoices ch = checked_choices(d, choices);
  const Permutation to_edges = admissible_permutation(d, ch).inverse();
  const int m = c.pair()->sub_dim();
  const std::vector<SparseTensor> rt = vertex_tensors(c, w);
  const SparseTensor bivector = matrix_tensor(edge_bivector(w));
  const std::array<int, 2> pair_axes{0, 1};
  return antisymmetrize(m, d.num_vertices, [&](const std::vector<int>& args) {
    SparseTensor full = SparseTensor::scalar(1);
    for (int a : args) full = outer(full, rt[a]);
    SparseTensor t = tau_apply(to_edges, full);
    while (t.rank() > 0) t = contract(t, pair_axes, bivector, pair_axes);
    return t.value();
  });
}

WeightClass weight_class(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d,
                         const std::optional<AdmissibleChoices>& choices) {
  WeightClass out;
  out.cocycle = weight_cocycle(c, w, d, choices);
  const ModuleRep rep = trivial_module(c);
  out.cohomology = cohomology(rep, out.cocycle.degree());
  out.coordinates = class_coordinates(rep, out.cohomology, out.cocycle);
  return out;
}

bool check_AS(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d) {
  for (int v = 0; v < d.num_vertices; ++v) {
    const auto [same, flipped] = as_pair(d, v);
    if (!(weight_cocycle(c, w, same) + weight_cocycle(c, w, flipped)).is_zero()) return false;
  }
  return true;
}

IhxResult ihx_combination(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d, int e) {
  const IhxTriple t = ihx_triple(d, e);
  IhxResult out;
  out.combination = weight_cocycle(c, w, t.i, t.ci) - weight_cocycle(c, w, t.h, t.ch) + weight_cocycle(c, w, t.x, t.cx);
  const ModuleRep rep = trivial_module(c);
  out.closed = ce_differential(rep, out.combination).is_zero();
  out.exact = out.closed && exact_in(rep, out.combination);
  return out;
}

bool check_IHX(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d, int e) {
  return ihx_combination(c, w, d, e).exact;
}

bool IhxLocalTensors::identity_holds() const {
  const CochainForm sum = combination();
  return sum == psi_lowered && d_phi_lowered && sum == *d_phi_lowered;
}

IhxLocalTensors ihx_local_tensors(const Connection& c, const SymplecticForm& w) {
  require_quotient(c);
  const PairPtr& p = c.pair();
  const int d = p->quotient_dim();
  const CochainForm rt = tilde_cocycle(atiyah_cocycle(c), w);
  const CochainForm rr = shuffle_wedge(rt, rt);
  const SparseTensor bivector = matrix_tensor(edge_bivector(w));
  const std::array<int, 2> pair_axes{0, 1};
  auto local = [&](std::string_view cycles) {
    const CochainForm moved = rr.permute_values(Permutation::from_cycles(cycles, 6));
    CochainForm out(rr.dim_h(), 2, {d, d, d, d});
    for (const auto& [idx, v] : moved.components()) out.add(idx, contract(v, pair_axes, bivector, pair_axes));
    return out;
  };
  IhxLocalTensors out;
  out.delta_i = local("(13)(24)");
  out.delta_h = local("(15234)");
  out.delta_x = local("(13)(25)");
  out.psi_lowered = bianchi_psi(c, &w);

  const CochainForm psi = bianchi_psi(c);
  const ModuleRep psi_rep = psi_module(p);
  out.phi = is_coboundary(psi_rep, psi);
  if (out.phi) {
    // omega o (phi (x) id): lower the last slot of phi.
    SparseTensor flat({d, d});
    for (int g = 0; g < d; ++g)
      for (int b = 0; b < d; ++b) flat.set({g, b}, w.matrix()(g, b));
    const std::array<int, 1> last{3}, first{0};
    CochainForm lowered(out.phi->dim_h(), out.phi->degree(), {d, d, d, d});
    for (const auto& [idx, v] : out.phi->components()) lowered.add(idx, contract(v, last, flat, first));
    out.d_phi_lowered = ce_differential(extend_rep(quotient_rep(p), 0, 4), lowered);
  }
  return out;
}

Scalar double_bracket_pairing(const CochainForm& atiyah, const SymplecticForm& w, int a1, int a2,
                              const std::array<int, 4>& b) {
  const int d = w.dim();
  const SparseTensor r1 = atiyah.at({a1});
  const SparseTensor r2 = atiyah.at({a2});
  // R_a(x, y)^g as a vector over g for basis vectors x, y.
  auto apply = [d](const SparseTensor& r, const Vector& x, int y) {
    Vector out(d);
    for (int t = 0; t < d; ++t)
      if (!rwpair::is_zero(x[t]))
        for (int g = 0; g < d; ++g) out[g] += x[t] * r.at({t, y, g});
    return out;
  };
  Vector e1(d);
  e1[b[0]] = 1;
  auto nested = [&](const SparseTensor& outer_r, const SparseTensor& inner_r) {
    Vector inner(d);
    for (int g = 0; g < d; ++g) inner[g] = inner_r.at({b[0], b[1], g});
    return apply(outer_r, inner, b[2]);
  };
  const Vector v1 = nested(r1, r2), v2 = nested(r2, r1);
  Scalar s = 0;
  for (int g = 0; g < d; ++g) s += (v1[g] - v2[g]) * w.matrix()(g, b[3]);
  return s;
}

CochainForm chord_weight(const Connection& cE, const SymplecticForm& w, const ChordDiagram& cd, int origin) {
  if (!cE.pair()) throw std::invalid_argument("connection without a pair");
  if (w.pair()->dim() != cE.pair()->dim() || w.pair()->sub_dim() != cE.pair()->sub_dim())
    throw std::invalid_argument("connection and symplectic form live on different pairs");
  const ChordOrder order = chord_vertex_order(cd, origin);
  const CochainForm r = atiyah_cocycle(cE);
  const int m = r.dim_h(), n = cd.points;
  std::vector<SparseTensor> vt;
  for (int a = 0; a < m; ++a) vt.push_back(r.at({a}));
  const SparseTensor bivector = matrix_tensor(edge_bivector(w));
  // Labels: j for the q* slot at vertex j, n + j for the End(E) index
  // between vertex j and vertex j + 1.
  auto trace_label = [n](int j) { return n + (j + n) % n; };
  return antisymmetrize(m, n, [&](const std::vector<int>& args) {
    TensorNetwork net;
    for (int j = 0; j < n; ++j) {
      const SparseTensor& t = vt[args[j]];
      if (t.is_zero()) return Scalar(0);
      net.add(t, {j, trace_label(j), trace_label(j - 1)});
    }
    for (const auto& cv : order.chord_vertices) net.add(bivector, {cv[0], cv[1]});
    return net.contract().value();
  });
}

FourTResult four_t_combination(const Connection& cE, const SymplecticForm& w, const FourTQuadruple& q) {
  validate_four_t(q);
  FourTResult out;
  out.combination = chord_weight(cE, w, q.diagrams[0]) - chord_weight(cE, w, q.diagrams[1]) -
                    chord_weight(cE, w, q.diagrams[2]) + chord_weight(cE, w, q.diagrams[3]);
  out.exact = exact_in(ModuleRep(cE.pair()), out.combination);
  return out;
}

bool check_4T(const Connection& cE, const SymplecticForm& w, const FourTQuadruple& q) {
  return four_t_combination(cE, w, q).exact;
}

CochainForm cup(const CochainForm& a, const CochainForm& b) {
  if (!a.value_shape().empty() || !b.value_shape().empty()) throw std::invalid_argument("cup needs scalar forms");
  return shuffle_wedge(a, b);
}

CochainForm deframe(const std::vector<CochainForm>& subset_weights, const CochainForm& s, int order) {
  if (order < 0 || order > 20 || subset_weights.size() != (std::size_t{1} << order))
    throw std::invalid_argument("need one weight per subset of chords");
  const int m = s.dim_h();
  // powers[t] = (-s)^t under the cup product.
  std::vector<CochainForm> powers{CochainForm(m, 0, {})};
  powers[0].add({}, SparseTensor::scalar(1));
  for (int t = 1; t <= order; ++t) powers.push_back(cup(powers.back(), Scalar(-1) * s));
  CochainForm out(m, 2 * order, {});
  for (std::size_t mask = 0; mask < subset_weights.size(); ++mask) {
    const int size = __builtin_popcountll(mask);
    out += cup(powers[order - size], subset_weights[mask]);
  }
  return out;
}

CochainForm deframed_chord_weight(const Connection& cE, const SymplecticForm& w, const ChordDiagram& cd) {
  cd.validate();
  const int n = cd.order();
  const int m = cE.pair()->sub_dim();
  std::vector<CochainForm> weights;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (mask == 0) {
      CochainForm one(m, 0, {});
      one.add({}, SparseTensor::scalar(1));
      weights.push_back(one);
      continue;
    }
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) keep.push_back(i);
    weights.push_back(chord_weight(cE, w, sub_diagram(cd, keep)));
  }
  const CochainForm s = chord_weight(cE, w, ChordDiagram{2, {{0, 1}}});
  return deframe(weights, s, n);
}

bool check_1T(const Connection& cE, const SymplecticForm& w, const ChordDiagram& cd) {
  return exact_in(ModuleRep(cE.pair()), deframed_chord_weight(cE, w, cd));
}

}  // namespace rwpair
