#pragma once

#include <string>
#include <vector>

#include "ramify/galois.hpp"

namespace ramify {

struct CatalogItem {
  ExtensionSpec spec;
  std::string description;
  // hand-computed invariants
  std::vector<Rat> expected_profile;
  Rat expected_u;
};

const std::vector<CatalogItem>& builtin_catalog();
// Throws DomainError for unknown names.
const ExtensionSpec& builtin_spec(const std::string& name);

}  // namespace ramify
