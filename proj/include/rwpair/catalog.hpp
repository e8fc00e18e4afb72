#pragma once

#include "rwpair/symplectic.hpp"

#include <string>
#include <vector>

namespace rwpair {

struct CatalogEntry {
  std::string name;
  PairPtr pair;
  SymplecticForm omega;
  std::string note;
};

/// Names of the built-in symplectic pairs.
std::vector<std::string> catalog_names();
/// Throws std::invalid_argument for an unknown name.
CatalogEntry catalog_entry(const std::string& name);
std::vector<CatalogEntry> catalog();

}  // namespace rwpair
