#pragma once

#include "wittsupport/serialize.hpp"

#include <string>
#include <vector>

namespace witt {

struct CatalogEntry {
  Json descriptor;
  std::string expected;  // verdict name
};

/// Shipped rank-2 family instances spanning dense, punctured and cut supports.
const std::vector<CatalogEntry>& family_catalog();

}  // namespace witt
