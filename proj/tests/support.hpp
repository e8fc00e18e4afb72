#pragma once

#include "rwpair/catalog.hpp"
#include "rwpair/connection.hpp"

#include <random>
#include <vector>

namespace testing {

using namespace rwpair;

inline Scalar random_scalar(std::mt19937_64& rng, int bound = 4, int denominator = 3) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, denominator);
  Scalar s(num(rng), den(rng));
  s.canonicalize();
  return s;
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound = 4) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, bound);
  return m;
}

/// Random tensor where roughly half the entries are nonzero.
inline SparseTensor random_tensor(std::mt19937_64& rng, const std::vector<int>& shape) {
  SparseTensor t(shape);
  std::size_t total = 1;
  for (int s : shape) total *= static_cast<std::size_t>(s);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t off = 0; off < total; ++off)
    if (coin(rng)) t.set(unflatten(shape, off), random_scalar(rng));
  return t;
}

/// Dense value of a scalar form on an arbitrary argument tuple.
inline Scalar scalar_value(const CochainForm& f, const std::vector<int>& args) {
  const SparseTensor v = f.evaluate(args);
  return v.is_zero() ? Scalar(0) : v.value();
}

/// Symplectic connection built from a random extend-action start.
inline Connection random_symplectic(const CatalogEntry& e, std::mt19937_64& rng) {
  return make_symplectic(make_torsion_free(random_extend_action_connection(e.pair, rng)), e.omega);
}

inline Connection standard_symplectic(const CatalogEntry& e) {
  return make_symplectic(make_torsion_free(extend_action_connection(e.pair)), e.omega);
}

}  // namespace testing
