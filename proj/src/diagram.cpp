#include "rwpair/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rwpair {

void TrivalentDiagram::validate() const {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  if (num_flags() != 3 * num_vertices) throw std::invalid_argument("expected three flags per vertex");
  if (2 * num_edges() != num_flags()) throw std::invalid_argument("3|V| != 2|E|");
  if (static_cast<int>(cyclic.size()) != num_vertices) throw std::invalid_argument("one cyclic order per vertex required");
  std::vector<int> per_vertex(num_vertices, 0);
  for (int v : flag_vertex) {
    if (v < 0 || v >= num_vertices) throw std::invalid_argument("flag attached to a missing vertex");
    ++per_vertex[v];
  }
  for (int v = 0; v < num_vertices; ++v)
    if (per_vertex[v] != 3) throw std::invalid_argument("vertex " + std::to_string(v) + " is not trivalent");
  std::vector<int> seen(num_flags(), 0);
  for (const auto& e : edges)
    for (int f : e) {
      if (f < 0 || f >= num_flags()) throw std::invalid_argument("edge uses a missing flag");
      if (seen[f]++) throw std::invalid_argument("flag " + std::to_string(f) + " lies on two edges");
    }
  for (int v = 0; v < num_vertices; ++v) {
    std::array<int, 3> c = cyclic[v];
    for (int f : c)
      if (f < 0 || f >= num_flags() || flag_vertex[f] != v)
        throw std::invalid_argument("cyclic order of vertex " + std::to_string(v) + " uses a foreign flag");
    std::sort(c.begin(), c.end());
    if (c[0] == c[1] || c[1] == c[2]) throw std::invalid_argument("cyclic order repeats a flag");
  }
}

int TrivalentDiagram::edge_of_flag(int f) const {
  for (int e = 0; e < num_edges(); ++e)
    if (edges[e][0] == f || edges[e][1] == f) return e;
  throw std::invalid_argument("flag on no edge");
}

int TrivalentDiagram::partner(int f) const {
  const auto& e = edges[edge_of_flag(f)];
  return e[0] == f ? e[1] : e[0];
}

bool TrivalentDiagram::has_self_loop() const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const auto& e) { return flag_vertex[e[0]] == flag_vertex[e[1]]; });
}

bool TrivalentDiagram::is_connected() const {
  if (num_vertices == 0) return true;
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges) parent[find(flag_vertex[e[0]])] = find(flag_vertex[e[1]]);
  for (int v = 1; v < num_vertices; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

TrivalentDiagram theta_diagram() {
  return {2, {0, 0, 0, 1, 1, 1}, {{0, 3}, {1, 5}, {2, 4}}, {{{0, 1, 2}}, {{3, 4, 5}}}};
}

namespace {

int perm_sign_of(const std::vector<int>& from, const std::vector<int>& to) {
  // sign of the permutation p with to[i] = from[p[i]]
  std::vector<int> pos(*std::max_element(from.begin(), from.end()) + 1, -1);
  for (std::size_t i = 0; i < from.size(); ++i) pos[from[i]] = static_cast<int>(i);
  std::vector<int> image;
  for (int x : to) image.push_back(pos.at(x));
  return Permutation(image).sign();
}

std::vector<int> vertex_word(const std::vector<int>& order, const std::vector<std::array<int, 3>>& flags) {
  std::vector<int> w;
  for (int v : order) w.insert(w.end(), flags[v].begin(), flags[v].end());
  return w;
}

std::vector<int> edge_word(const std::vector<int>& order, const std::vector<std::array<int, 2>>& edges) {
  std::vector<int> w;
  for (int e : order) w.insert(w.end(), edges[e].begin(), edges[e].end());
  return w;
}

std::vector<int> identity_order(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

bool is_permutation_of(const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != n) return false;
  std::vector<int> s = v;
  std::sort(s.begin(), s.end());
  return s == identity_order(n);
}

int three_parity(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  return perm_sign_of(std::vector<int>(a.begin(), a.end()), std::vector<int>(b.begin(), b.end()));
}

}  // namespace

bool orientation_equivalent(const TrivalentDiagram& d, const LinearOrientRep& r1, const LinearOrientRep& r2) {
  if (r1.edges.size() != d.edges.size() || r2.edges.size() != d.edges.size())
    throw std::invalid_argument("orientation representative has the wrong number of edges");
  if (!is_permutation_of(r1.vertex_order, d.num_vertices) || !is_permutation_of(r2.vertex_order, d.num_vertices))
    throw std::invalid_argument("vertex order is not a permutation of the vertices");
  int flips = 0;
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& a = r1.edges[e];
    const auto& b = r2.edges[e];
    if (a == b) continue;
    if (a[0] == b[1] && a[1] == b[0]) {
      ++flips;
      continue;
    }
    throw std::invalid_argument("orientation representatives describe different edges");
  }
  const int sign = d.num_vertices == 0 ? 1 : perm_sign_of(r1.vertex_order, r2.vertex_order);
  return (flips % 2 == 0) == (sign == 1);
}

LinearOrientRep cyclic_to_linear(const TrivalentDiagram& d) {
  LinearOrientRep r{identity_order(d.num_vertices), d.edges};
  if (d.num_vertices == 0) return r;
  const int sign = perm_sign_of(vertex_word(r.vertex_order, d.cyclic), edge_word(identity_order(d.num_edges()), d.edges));
  if (sign < 0) std::swap(r.edges[0][0], r.edges[0][1]);
  return r;
}

TrivalentDiagram linear_to_cyclic(const TrivalentDiagram& d, const LinearOrientRep& r) {
  TrivalentDiagram out = d;
  if (d.num_vertices == 0) return out;
  if (!orientation_equivalent(d, cyclic_to_linear(out), r)) std::swap(out.cyclic[0][1], out.cyclic[0][2]);
  return out;
}

bool cyclic_equivalent(const std::vector<std::array<int, 3>>& a, const std::vector<std::array<int, 3>>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cyclic orders of different diagrams");
  int odd = 0;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (three_parity(a[v], b[v]) < 0) ++odd;
  return odd % 2 == 0;
}

AdmissibleChoices default_choices(const TrivalentDiagram& d) {
  return {cyclic_to_linear(d), identity_order(d.num_edges()), d.cyclic};
}

Permutation admissible_permutation(const TrivalentDiagram& d, const AdmissibleChoices& ch) {
  d.validate();
  if (!is_permutation_of(ch.edge_order, d.num_edges())) throw std::invalid_argument("edge order is not a permutation");
  if (static_cast<int>(ch.vertex_flags.size()) != d.num_vertices)
    throw std::invalid_argument("one flag order per vertex required");
  for (int v = 0; v < d.num_vertices; ++v) {
    std::array<int, 3> a = ch.vertex_flags[v], b = d.cyclic[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("flag order at vertex " + std::to_string(v) + " uses foreign flags");
  }
  if (!orientation_equivalent(d, ch.rep, cyclic_to_linear(d)))
    throw std::invalid_argument("linear representative does not represent the diagram's orientation");
  if (!cyclic_equivalent(ch.vertex_flags, d.cyclic))
    throw std::invalid_argument("flag orders at the vertices do not represent the cyclic orientation");
  const std::vector<int> vw = vertex_word(ch.rep.vertex_order, ch.vertex_flags);
  const std::vector<int> ew = edge_word(ch.edge_order, ch.rep.edges);
  std::vector<int> edge_pos(d.num_flags());
  for (std::size_t i = 0; i < ew.size(); ++i) edge_pos[ew[i]] = static_cast<int>(i);
  std::vector<int> image(vw.size());
  for (std::size_t p = 0; p < vw.size(); ++p) image[p] = edge_pos[vw[p]];
  return Permutation(image);
}

AdmissibleChoices random_choices(const TrivalentDiagram& d, std::mt19937_64& rng) {
  AdmissibleChoices ch;
  ch.rep.vertex_order = identity_order(d.num_vertices);
  std::shuffle(ch.rep.vertex_order.begin(), ch.rep.vertex_order.end(), rng);
  ch.rep.edges = d.edges;
  std::bernoulli_distribution coin(0.5);
  for (auto& e : ch.rep.edges)
    if (coin(rng)) std::swap(e[0], e[1]);
  if (d.num_vertices > 0 && !orientation_equivalent(d, ch.rep, cyclic_to_linear(d)))
    std::swap(ch.rep.edges[0][0], ch.rep.edges[0][1]);
  ch.edge_order = identity_order(d.num_edges());
  std::shuffle(ch.edge_order.begin(), ch.edge_order.end(), rng);
  ch.vertex_flags = d.cyclic;
  for (auto& f : ch.vertex_flags) std::shuffle(f.begin(), f.end(), rng);
  if (d.num_vertices > 0 && !cyclic_equivalent(ch.vertex_flags, d.cyclic))
    std::swap(ch.vertex_flags[0][0], ch.vertex_flags[0][1]);
  return ch;
}

namespace {

// Multigraph on 2k vertices: upper triangle (including loops on the
// diagonal) of the multiplicity matrix.
using Multigraph = std::vector<std::vector<int>>;

Multigraph multigraph_of(const TrivalentDiagram& d) {
  Multigraph g(d.num_vertices, std::vector<int>(d.num_vertices, 0));
  for (const auto& e : d.edges) {
    int a = d.flag_vertex[e[0]], b = d.flag_vertex[e[1]];
    if (a > b) std::swap(a, b);
    ++g[a][b];
  }
  return g;
}

std::vector<int> canonical_code(const Multigraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> perm = identity_order(n), best;
  do {
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        int a = perm[i], b = perm[j];
        if (a > b) std::swap(a, b);
        code.push_back(g[a][b]);
      }
    if (best.empty() || code > best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TrivalentDiagram diagram_from_multigraph(const Multigraph& g) {
  const int n = static_cast<int>(g.size());
  TrivalentDiagram d;
  d.num_vertices = n;
  d.flag_vertex.resize(3 * n);
  for (int f = 0; f < 3 * n; ++f) d.flag_vertex[f] = f / 3;
  std::vector<int> next(n);
  for (int v = 0; v < n; ++v) next[v] = 3 * v;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int t = 0; t < g[a][b]; ++t) {
        const int fa = next[a]++;
        const int fb = next[b]++;
        d.edges.push_back({fa, fb});
      }
  for (int v = 0; v < n; ++v) d.cyclic.push_back({3 * v, 3 * v + 1, 3 * v + 2});
  return d;
}

Multigraph multigraph_from_code(const std::vector<int>& code, int n) {
  Multigraph g(n, std::vector<int>(n, 0));
  std::size_t t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) g[i][j] = code[t++];
  return g;
}

std::vector<TrivalentDiagram> from_codes(const std::set<std::vector<int>>& codes, int n, bool connected_only) {
  std::vector<TrivalentDiagram> out;
  // Larger codes first: they favour multi-edges between low vertices.
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) {
    TrivalentDiagram d = diagram_from_multigraph(multigraph_from_code(*it, n));
    if (!connected_only || d.is_connected()) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::vector<TrivalentDiagram> enumerate_trivalent(int k, bool connected_only) {
  if (k < 0 || k > 3) throw std::invalid_argument("enumeration supports orders 0 to 3");
  const int n = 2 * k;
  std::set<std::vector<int>> codes;
  Multigraph g(n, std::vector<int>(n, 0));
  std::vector<int> deg(n, 0);
  // Fill cells (i, j), j >= i, in row-major order; a loop adds 2 to the degree.
  std::function<void(int, int)> fill = [&](int i, int j) {
    if (i == n) {
      codes.insert(canonical_code(g));
      return;
    }
    if (j == n) {
      if (deg[i] == 3) fill(i + 1, i + 1);
      return;
    }
    const int per = i == j ? 2 : 1;
    for (int mult = 0; deg[i] + per * mult <= 3 && (i == j || deg[j] + mult <= 3); ++mult) {
      g[i][j] = mult;
      deg[i] += per * mult;
      if (i != j) deg[j] += mult;
      fill(i, j + 1);
      deg[i] -= per * mult;
      if (i != j) deg[j] -= mult;
    }
    g[i][j] = 0;
  };
  fill(0, 0);
  return from_codes(codes, n, connected_only);
}

std::vector<TrivalentDiagram> enumerate_by_matchings(int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("matching enumeration supports orders 0 to 2");
  const int n = 2 * k, nf = 6 * k;
  std::set<std::vector<int>> codes;
  std::vector<int> mate(nf, -1);
  std::function<void()> rec = [&]() {
    int f = 0;
    while (f < nf && mate[f] >= 0) ++f;
    if (f == nf) {
      Multigraph g(n, std::vector<int>(n, 0));
      for (int a = 0; a < nf; ++a)
        if (a < mate[a]) {
          int u = a / 3, v = mate[a] / 3;
          if (u > v) std::swap(u, v);
          ++g[u][v];
        }
      codes.insert(canonical_code(g));
      return;
    }
    for (int h = f + 1; h < nf; ++h) {
      if (mate[h] >= 0) continue;
      mate[f] = h;
      mate[h] = f;
      rec();
      mate[f] = mate[h] = -1;
    }
  };
  rec();
  return from_codes(codes, n, false);
}

bool isomorphic(const TrivalentDiagram& a, const TrivalentDiagram& b) {
  if (a.num_vertices != b.num_vertices) return false;
  return canonical_code(multigraph_of(a)) == canonical_code(multigraph_of(b));
}

namespace {

std::array<int, 3> rotate_to(const std::array<int, 3>& c, int f) {
  for (int r = 0; r < 3; ++r)
    if (c[r] == f) return {c[r], c[(r + 1) % 3], c[(r + 2) % 3]};
  throw std::invalid_argument("flag not at this vertex");
}

enum Role { kNE, kNW, kSW, kSE, kCU, kCV, kNumRoles };

}  // namespace

IhxTriple ihx_triple(const TrivalentDiagram& d, int e) {
  d.validate();
  if (e < 0 || e >= d.num_edges()) throw std::invalid_argument("edge index out of range");
  const int fa = d.edges[e][0], fb = d.edges[e][1];
  const int u = d.flag_vertex[fa], v = d.flag_vertex[fb];
  if (u == v) throw std::invalid_argument("IHX needs an edge joining two distinct vertices");
  const auto cu = rotate_to(d.cyclic[u], fa);
  const auto cv = rotate_to(d.cyclic[v], fb);
  const int x1 = cu[1], x2 = cu[2], x3 = fa, y1 = fb, y2 = cv[1], y3 = cv[2];

  // Roles of the six inner flags in the I picture.
  std::array<int, kNumRoles> role_flag_i{};
  role_flag_i[kNE] = x1;
  role_flag_i[kNW] = x2;
  role_flag_i[kSW] = y2;
  role_flag_i[kSE] = y3;
  role_flag_i[kCU] = x3;
  role_flag_i[kCV] = y1;
  auto role_of = [&](int f) {
    for (int r = 0; r < kNumRoles; ++r)
      if (role_flag_i[r] == f) return r;
    return -1;
  };

  // Physical flag taking each role; u holds (x1, x2, x3), v holds (y1, y2, y3).
  const std::array<int, kNumRoles> layout_i{x1, x2, y2, y3, x3, y1};
  const std::array<int, kNumRoles> layout_h{y1, x1, x2, y3, x3, y2};
  const std::array<int, kNumRoles> layout_x{x1, y1, x2, y3, x3, y2};

  auto build = [&](const std::array<int, kNumRoles>& layout, std::array<int, 2> central) {
    TrivalentDiagram out = d;
    out.cyclic[u] = {x1, x2, x3};
    out.cyclic[v] = {y1, y2, y3};
    for (int t = 0; t < d.num_edges(); ++t) {
      if (t == e) {
        out.edges[t] = central;
        continue;
      }
      for (int s = 0; s < 2; ++s) {
        const int r = role_of(d.edges[t][s]);
        out.edges[t][s] = r < 0 ? d.edges[t][s] : layout[r];
      }
    }
    return out;
  };

  IhxTriple t{build(layout_i, {x3, y1}), build(layout_h, {y2, x3}), build(layout_x, {x3, y2}), {}, {}, {}};

  std::vector<int> vorder{u, v};
  for (int w = 0; w < d.num_vertices; ++w)
    if (w != u && w != v) vorder.push_back(w);
  std::vector<int> eorder{e};
  for (int s = 0; s < d.num_edges(); ++s)
    if (s != e) eorder.push_back(s);

  // Fix the common edge directions so that the I representative carries the
  // orientation of the I diagram; H and X share every non-central direction.
  if (!orientation_equivalent(t.i, {vorder, t.i.edges}, cyclic_to_linear(t.i))) {
    const int s = eorder[1];
    for (TrivalentDiagram* g : {&t.i, &t.h, &t.x}) std::swap(g->edges[s][0], g->edges[s][1]);
  }
  t.ci = {{vorder, t.i.edges}, eorder, t.i.cyclic};
  t.ch = {{vorder, t.h.edges}, eorder, t.h.cyclic};
  t.cx = {{vorder, t.x.edges}, eorder, t.x.cyclic};
  for (const TrivalentDiagram* g : {&t.i, &t.h, &t.x}) g->validate();
  return t;
}

std::pair<TrivalentDiagram, TrivalentDiagram> as_pair(const TrivalentDiagram& d, int v) {
  if (v < 0 || v >= d.num_vertices) throw std::invalid_argument("vertex index out of range");
  TrivalentDiagram flipped = d;
  std::swap(flipped.cyclic[v][1], flipped.cyclic[v][2]);
  return {d, flipped};
}

void ChordDiagram::validate() const {
  if (points != 2 * order()) throw std::invalid_argument("chord diagram needs two points per chord");
  std::vector<int> seen(points, 0);
  for (const auto& c : chords)
    for (int p : c) {
      if (p < 0 || p >= points) throw std::invalid_argument("chord endpoint out of range");
      if (seen[p]++) throw std::invalid_argument("point " + std::to_string(p) + " used twice");
    }
}

int ChordDiagram::chord_of_point(int p) const {
  for (int i = 0; i < order(); ++i)
    if (chords[i][0] == p || chords[i][1] == p) return i;
  throw std::invalid_argument("point on no chord");
}

ChordOrder chord_vertex_order(const ChordDiagram& c, int origin) {
  c.validate();
  const int n = c.points;
  if (n > 0 && (origin < 0 || origin >= n)) throw std::invalid_argument("origin gap out of range");
  ChordOrder out;
  for (int j = 0; j < n; ++j) out.points.push_back((origin + j) % n);
  for (const auto& ch : c.chords) {
    int a = (ch[0] - origin + n) % n, b = (ch[1] - origin + n) % n;
    if (a > b) std::swap(a, b);
    out.chord_vertices.push_back({a, b});
  }
  return out;
}

bool is_isolated(const ChordDiagram& c, int chord) {
  int p = c.chords[chord][0], q = c.chords[chord][1];
  if (p > q) std::swap(p, q);
  for (int i = 0; i < c.order(); ++i) {
    if (i == chord) continue;
    const bool r_in = c.chords[i][0] > p && c.chords[i][0] < q;
    const bool s_in = c.chords[i][1] > p && c.chords[i][1] < q;
    if (r_in != s_in) return false;
  }
  return true;
}

bool has_isolated_chord(const ChordDiagram& c) {
  for (int i = 0; i < c.order(); ++i)
    if (is_isolated(c, i)) return true;
  return false;
}

ChordDiagram sub_diagram(const ChordDiagram& c, const std::vector<int>& keep) {
  std::vector<int> used;
  for (int i : keep) used.insert(used.end(), c.chords.at(i).begin(), c.chords.at(i).end());
  std::sort(used.begin(), used.end());
  auto renum = [&](int p) { return static_cast<int>(std::lower_bound(used.begin(), used.end(), p) - used.begin()); };
  ChordDiagram out{static_cast<int>(used.size()), {}};
  for (int i : keep) out.chords.push_back({renum(c.chords[i][0]), renum(c.chords[i][1])});
  return out;
}

ChordDiagram canonical_chord(const ChordDiagram& c) {
  c.validate();
  const int n = c.points;
  ChordDiagram best;
  for (int r = 0; r < std::max(n, 1); ++r) {
    ChordDiagram rot{n, {}};
    for (const auto& ch : c.chords) {
      int a = n ? (ch[0] + r) % n : 0, b = n ? (ch[1] + r) % n : 0;
      if (a > b) std::swap(a, b);
      rot.chords.push_back({a, b});
    }
    std::sort(rot.chords.begin(), rot.chords.end());
    if (r == 0 || rot.chords < best.chords) best = rot;
  }
  return best;
}

std::vector<ChordDiagram> enumerate_chord(int k) {
  if (k < 0 || k > 5) throw std::invalid_argument("chord enumeration supports orders 0 to 5");
  const int n = 2 * k;
  std::set<std::vector<std::array<int, 2>>> seen;
  std::vector<ChordDiagram> out;
  std::vector<int> mate(n, -1);
  std::function<void()> rec = [&]() {
    int f = 0;
    while (f < n && mate[f] >= 0) ++f;
    if (f == n) {
      ChordDiagram c{n, {}};
      for (int a = 0; a < n; ++a)
        if (a < mate[a]) c.chords.push_back({a, mate[a]});
      ChordDiagram canon = canonical_chord(c);
      if (seen.insert(canon.chords).second) out.push_back(canon);
      return;
    }
    for (int h = f + 1; h < n; ++h) {
      if (mate[h] >= 0) continue;
      mate[f] = h;
      mate[h] = f;
      rec();
      mate[f] = mate[h] = -1;
    }
  };
  rec();
  return out;
}

namespace {

ChordDiagram from_labels(const std::vector<int>& seq) {
  ChordDiagram c{static_cast<int>(seq.size()), {}};
  const int labels = static_cast<int>(seq.size()) / 2;
  for (int l = 0; l < labels; ++l) {
    std::array<int, 2> ch{-1, -1};
    for (int p = 0; p < c.points; ++p)
      if (seq[p] == l) (ch[0] < 0 ? ch[0] : ch[1]) = p;
    if (ch[1] < 0) throw std::invalid_argument("chord label does not occur twice");
    c.chords.push_back(ch);
  }
  c.validate();
  return c;
}

}  // namespace

FourTQuadruple make_four_t(std::vector<int> base, int moving_chord, int fixed_chord) {
  if (moving_chord == fixed_chord) throw std::invalid_argument("4T needs two different chords");
  std::vector<int> at;
  int moving_seen = 0;
  for (int i = 0; i < static_cast<int>(base.size()); ++i) {
    if (base[i] == fixed_chord) at.push_back(i);
    if (base[i] == moving_chord) ++moving_seen;
  }
  if (at.size() != 2 || moving_seen != 1) throw std::invalid_argument("malformed 4T base sequence");
  FourTQuadruple q{base, moving_chord, fixed_chord, {}};
  const std::array<int, 4> insert_at{at[0] + 1, at[0], at[1], at[1] + 1};
  for (int t = 0; t < 4; ++t) {
    std::vector<int> seq = base;
    seq.insert(seq.begin() + insert_at[t], moving_chord);
    q.diagrams[t] = from_labels(seq);
  }
  return q;
}

std::vector<FourTQuadruple> four_t_quadruples(int k) {
  std::vector<FourTQuadruple> out;
  if (k < 2) return out;
  for (const ChordDiagram& c : enumerate_chord(k))
    for (int b = 0; b < k; ++b)
      for (int s = 0; s < 2; ++s)
        for (int a = 0; a < k; ++a) {
          if (a == b) continue;
          std::vector<int> base;
          for (int p = 0; p < c.points; ++p)
            if (p != c.chords[b][s]) base.push_back(c.chord_of_point(p));
          out.push_back(make_four_t(base, b, a));
        }
  return out;
}

void validate_four_t(const FourTQuadruple& q) {
  const FourTQuadruple fresh = make_four_t(q.base, q.moving_chord, q.fixed_chord);
  if (fresh.diagrams != q.diagrams) throw std::invalid_argument("diagrams do not form a 4T quadruple");
}

}  // namespace rwpair
