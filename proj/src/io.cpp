#include "rwpair/io.hpp"

#include <fstream>
#include <sstream>

namespace rwpair {

namespace {

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char ch : key) {
    if (ch == '~') escaped += "~0";
    else if (ch == '/') escaped += "~1";
    else escaped += ch;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& member(const Json& j, const std::string& pointer, const std::string& key) {
  if (!j.is_object()) throw InputError(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(child(pointer, key), "missing member");
  return *it;
}

const Json& array_at(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw InputError(pointer, "expected an array");
  return j;
}

int int_from_json(const Json& j, const std::string& pointer, int lo, int hi) {
  if (!j.is_number_integer()) throw InputError(pointer, "expected an integer");
  const long long v = j.get<long long>();
  if (v < lo || v > hi)
    throw InputError(pointer, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const std::string& pointer, int lo, int hi) {
  array_at(j, pointer);
  std::vector<int> out;
  for (std::size_t t = 0; t < j.size(); ++t) out.push_back(int_from_json(j[t], child(pointer, t), lo, hi));
  return out;
}

template <std::size_t N>
std::array<int, N> int_array(const Json& j, const std::string& pointer, int lo, int hi) {
  array_at(j, pointer);
  if (j.size() != N) throw InputError(pointer, "expected " + std::to_string(N) + " entries");
  std::array<int, N> out{};
  for (std::size_t t = 0; t < N; ++t) out[t] = int_from_json(j[t], child(pointer, t), lo, hi);
  return out;
}

constexpr int kMaxDim = 4096;

Matrix square_from_json(const Json& j, const std::string& pointer, int dim) {
  Matrix m = matrix_from_json(j, pointer);
  if (m.rows() != dim || m.cols() != dim)
    throw InputError(pointer, "expected a " + std::to_string(dim) + " x " + std::to_string(dim) + " matrix");
  return m;
}

// Rethrows library validation failures as input errors at `pointer`.
template <class F>
auto validated(const std::string& pointer, F&& build) {
  try {
    return build();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(pointer, e.what());
  }
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return format_scalar(s); }

Scalar scalar_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return parse_scalar(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw InputError(pointer, "expected a rational string \"p/q\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::exception&) {
    throw InputError(pointer, "invalid rational \"" + j.get<std::string>() + "\"");
  }
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Matrix matrix_from_json(const Json& j, const std::string& pointer) {
  array_at(j, pointer);
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  for (int r = 0; r < rows; ++r) {
    const std::string rp = child(pointer, r);
    array_at(j[r], rp);
    if (cols < 0) cols = static_cast<int>(j[r].size());
    if (static_cast<int>(j[r].size()) != cols) throw InputError(rp, "rows have different lengths");
  }
  Matrix m(rows, std::max(cols, 0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], child(child(pointer, r), c));
  return m;
}

Json pair_to_json(const LiePair& p) {
  const int n = p.dim();
  Json brackets = Json::array();
  auto coeffs_of = [&](int i, int j, bool overrides) {
    Json coeffs = Json::object();
    for (int k = 0; k < n; ++k) {
      const Scalar v = p.c(i, j, k);
      if (overrides ? v != -p.c(j, i, k) : !rwpair::is_zero(v)) coeffs[std::to_string(k)] = scalar_to_json(v);
    }
    return coeffs;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Json coeffs = coeffs_of(i, j, false);
      if (!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  // Entries not implied by antisymmetry: diagonal values and broken partners.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      Json coeffs = coeffs_of(i, j, true);
      if (!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  return {{"dim", n}, {"sub_dim", p.sub_dim()}, {"brackets", brackets}};
}

LiePair pair_from_json(const Json& j, const std::string& pointer) {
  const int n = int_from_json(member(j, pointer, "dim"), child(pointer, "dim"), 0, kMaxDim);
  const int m = int_from_json(member(j, pointer, "sub_dim"), child(pointer, "sub_dim"), 0, n);
  const std::string bp = child(pointer, "brackets");
  const Json& brackets = array_at(member(j, pointer, "brackets"), bp);
  StructureConstants g(n);
  // Antisymmetric pairs first, then single-entry overrides.
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t t = 0; t < brackets.size(); ++t) {
      const std::string ep = child(bp, t);
      const Json& e = brackets[t];
      const int i = int_from_json(member(e, ep, "i"), child(ep, "i"), 0, n - 1);
      const int jj = int_from_json(member(e, ep, "j"), child(ep, "j"), 0, n - 1);
      if ((pass == 0) != (i < jj)) continue;
      const std::string cp = child(ep, "coeffs");
      const Json& coeffs = member(e, ep, "coeffs");
      if (!coeffs.is_object()) throw InputError(cp, "expected an object mapping k to a rational");
      for (const auto& [key, value] : coeffs.items()) {
        const std::string kp = child(cp, key);
        int k = -1;
        try {
          std::size_t used = 0;
          k = std::stoi(key, &used);
          if (used != key.size()) k = -1;
        } catch (const std::exception&) {
          k = -1;
        }
        if (k < 0 || k >= n) throw InputError(kp, "key is not a basis index");
        const Scalar v = scalar_from_json(value, kp);
        if (pass == 0) g.set_bracket(i, jj, k, v);
        else g.set_raw(i, jj, k, v);
      }
    }
  return LiePair(std::move(g), m);
}

PairFile pair_file_from_json(const Json& j) {
  PairFile out;
  out.pair = std::make_shared<const LiePair>(pair_from_json(j));
  if (j.contains("omega")) out.omega = square_from_json(j["omega"], "/omega", out.pair->quotient_dim());
  return out;
}

Json pair_file_to_json(const LiePair& p, const std::optional<Matrix>& omega) {
  Json out = pair_to_json(p);
  if (omega) out["omega"] = matrix_to_json(*omega);
  return out;
}

Json omega_to_json(const Matrix& omega) { return {{"omega", matrix_to_json(omega)}}; }

Matrix omega_from_json(const Json& j, const std::string& pointer) {
  return matrix_from_json(member(j, pointer, "omega"), child(pointer, "omega"));
}

Json connection_to_json(const Connection& c) {
  Json gamma = Json::array();
  for (const Matrix& op : c.ops()) gamma.push_back(matrix_to_json(op.transpose()));
  return {{"gamma", gamma}};
}

namespace {

std::vector<Matrix> gamma_from_json(const Json& j, const std::string& pointer, int n, int dim) {
  const std::string gp = child(pointer, "gamma");
  const Json& gamma = array_at(member(j, pointer, "gamma"), gp);
  if (static_cast<int>(gamma.size()) != n)
    throw InputError(gp, "expected one block per basis vector of g (" + std::to_string(n) + ")");
  std::vector<Matrix> ops;
  for (int i = 0; i < n; ++i) ops.push_back(square_from_json(gamma[i], child(gp, i), dim).transpose());
  return ops;
}

}  // namespace

Connection connection_from_json(const PairPtr& p, const Json& j, const std::string& pointer) {
  auto ops = gamma_from_json(j, pointer, p->dim(), p->quotient_dim());
  return validated(pointer, [&] { return Connection(p, std::move(ops)); });
}

Connection connection_from_json(const ModuleRep& target, const Json& j, const std::string& pointer) {
  auto ops = gamma_from_json(j, pointer, target.pair()->dim(), target.dim());
  return validated(pointer, [&] { return Connection(target, std::move(ops)); });
}

Json module_to_json(const ModuleRep& rep) {
  Json action = Json::array();
  for (int a = 0; a < rep.pair()->sub_dim(); ++a) action.push_back(matrix_to_json(rep.matrix(a)));
  return {{"dim", rep.dim()}, {"action", action}};
}

ModuleRep module_from_json(const PairPtr& p, const Json& j, const std::string& pointer) {
  const int dim = int_from_json(member(j, pointer, "dim"), child(pointer, "dim"), 1, kMaxDim);
  const std::string ap = child(pointer, "action");
  const Json& action = array_at(member(j, pointer, "action"), ap);
  if (static_cast<int>(action.size()) != p->sub_dim())
    throw InputError(ap, "expected one matrix per basis vector of h (" + std::to_string(p->sub_dim()) + ")");
  std::vector<Matrix> mats;
  for (int a = 0; a < p->sub_dim(); ++a) mats.push_back(square_from_json(action[a], child(ap, a), dim));
  return validated(pointer, [&] { return ModuleRep(p, dim, std::move(mats)); });
}

Json diagram_to_json(const TrivalentDiagram& d) {
  return {{"vertices", d.num_vertices}, {"flag_vertex", d.flag_vertex}, {"edges", d.edges}, {"cyclic", d.cyclic}};
}

TrivalentDiagram diagram_from_json(const Json& j, const std::string& pointer) {
  TrivalentDiagram d;
  d.num_vertices = int_from_json(member(j, pointer, "vertices"), child(pointer, "vertices"), 0, kMaxDim);
  const int flags = 3 * d.num_vertices;
  d.flag_vertex =
      int_list(member(j, pointer, "flag_vertex"), child(pointer, "flag_vertex"), 0, std::max(d.num_vertices - 1, 0));
  const std::string ep = child(pointer, "edges");
  const Json& edges = array_at(member(j, pointer, "edges"), ep);
  for (std::size_t t = 0; t < edges.size(); ++t) d.edges.push_back(int_array<2>(edges[t], child(ep, t), 0, flags - 1));
  const std::string cp = child(pointer, "cyclic");
  const Json& cyclic = array_at(member(j, pointer, "cyclic"), cp);
  for (std::size_t t = 0; t < cyclic.size(); ++t)
    d.cyclic.push_back(int_array<3>(cyclic[t], child(cp, t), 0, flags - 1));
  validated(pointer, [&] {
    d.validate();
    return 0;
  });
  return d;
}

Json chord_to_json(const ChordDiagram& c) { return {{"points", c.points}, {"chords", c.chords}}; }

ChordDiagram chord_from_json(const Json& j, const std::string& pointer) {
  ChordDiagram c;
  c.points = int_from_json(member(j, pointer, "points"), child(pointer, "points"), 0, kMaxDim);
  const std::string cp = child(pointer, "chords");
  const Json& chords = array_at(member(j, pointer, "chords"), cp);
  for (std::size_t t = 0; t < chords.size(); ++t)
    c.chords.push_back(int_array<2>(chords[t], child(cp, t), 0, std::max(c.points - 1, 0)));
  validated(pointer, [&] {
    c.validate();
    return 0;
  });
  return c;
}

Json cochain_to_json(const CochainForm& f) {
  Json comps = Json::array();
  for (const auto& [idx, value] : f.components()) {
    Json entries = Json::array();
    for (const auto& [at, v] : value.entries()) entries.push_back({{"at", at}, {"value", scalar_to_json(v)}});
    comps.push_back({{"index", idx}, {"entries", entries}});
  }
  return {{"dim_h", f.dim_h()}, {"degree", f.degree()}, {"value_shape", f.value_shape()}, {"components", comps}};
}

CochainForm cochain_from_json(const Json& j, const std::string& pointer) {
  const int dim_h = int_from_json(member(j, pointer, "dim_h"), child(pointer, "dim_h"), 0, kMaxDim);
  const int degree = int_from_json(member(j, pointer, "degree"), child(pointer, "degree"), 0, dim_h);
  const std::vector<int> shape = int_list(member(j, pointer, "value_shape"), child(pointer, "value_shape"), 1, kMaxDim);
  CochainForm out(dim_h, degree, shape);
  const std::string cp = child(pointer, "components");
  const Json& comps = array_at(member(j, pointer, "components"), cp);
  for (std::size_t t = 0; t < comps.size(); ++t) {
    const std::string tp = child(cp, t);
    const std::vector<int> idx = int_list(member(comps[t], tp, "index"), child(tp, "index"), 0, dim_h - 1);
    if (static_cast<int>(idx.size()) != degree || !std::is_sorted(idx.begin(), idx.end()) ||
        std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw InputError(child(tp, "index"), "expected a strictly increasing tuple of length " + std::to_string(degree));
    SparseTensor value(shape);
    const std::string ep = child(tp, "entries");
    const Json& entries = array_at(member(comps[t], tp, "entries"), ep);
    for (std::size_t s = 0; s < entries.size(); ++s) {
      const std::string sp = child(ep, s);
      const std::vector<int> at = int_list(member(entries[s], sp, "at"), child(sp, "at"), 0, kMaxDim);
      if (at.size() != shape.size()) throw InputError(child(sp, "at"), "index rank differs from value_shape");
      for (std::size_t r = 0; r < at.size(); ++r)
        if (at[r] >= shape[r]) throw InputError(child(child(sp, "at"), r), "index outside value_shape");
      value.add(at, scalar_from_json(member(entries[s], sp, "value"), child(sp, "value")));
    }
    out.add(idx, value);
  }
  return out;
}

Json weight_class_to_json(const WeightClass& w) {
  Json coords = Json::array();
  for (const Scalar& s : w.coordinates) coords.push_back(scalar_to_json(s));
  return {{"cocycle", cochain_to_json(w.cocycle)},
          {"cohomology_dim", w.cohomology.dim},
          {"class_coordinates", coords},
          {"class_vanishes", std::all_of(w.coordinates.begin(), w.coordinates.end(),
                                         [](const Scalar& s) { return rwpair::is_zero(s); })}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError("", path + ": " + e.what());
  }
}

}  // namespace rwpair
