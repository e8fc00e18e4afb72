#include "rwpair/catalog.hpp"

#include <stdexcept>

namespace rwpair {

namespace {

Matrix standard_form() { return Matrix::from_rows({{0, 1}, {-1, 0}}); }

CatalogEntry abelian4() {
  auto p = std::make_shared<const LiePair>(StructureConstants(4), 2);
  return {"abelian4", p, SymplecticForm(p, standard_form()), "abelian g of dimension 4, h spanned by e0 and e1"};
}

CatalogEntry heisenberg() {
  StructureConstants g(3);
  g.set_bracket(1, 2, 0, 1);
  auto p = std::make_shared<const LiePair>(g, 1);
  return {"heisenberg", p, SymplecticForm(p, standard_form()), "basis z, x, y with [x, y] = z and h = span{z}"};
}

CatalogEntry coadjoint(const std::string& name, int n, int row, int col, const std::string& note) {
  const MatrixLieAlgebra alg = special_linear(n);
  Matrix x(n, n);
  x(row, col) = 1;
  ReducedPair r = coadjoint_pair(alg.constants, alg.coordinates(x), alg.trace_form);
  return {name, r.pair, r.omega, note};
}

}  // namespace

std::vector<std::string> catalog_names() { return {"abelian4", "heisenberg", "sl2-nilp", "sl3-min"}; }

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "abelian4") return abelian4();
  if (name == "heisenberg") return heisenberg();
  if (name == "sl2-nilp")
    return coadjoint(name, 2, 0, 1, "sl(2) with h the centralizer of the nilpotent E12, trace pairing");
  if (name == "sl3-min")
    return coadjoint(name, 3, 0, 2, "sl(3) with h the centralizer of E13 (minimal nilpotent orbit), trace pairing");
  throw std::invalid_argument("unknown catalog entry: " + name);
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const std::string& name : catalog_names()) out.push_back(catalog_entry(name));
  return out;
}

}  // namespace rwpair
