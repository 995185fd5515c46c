#pragma once

#include "zda/algebra.hpp"

namespace zda {

/// Built-in algebras with regression expectations for the analysis pipeline.
struct CatalogEntry {
  std::string name;
  std::string description;
  Algebra algebra;
  std::string expected_tame;                  // "tame" / "not tame" / "undetermined"
  bool expected_proper = false;
  std::vector<std::size_t> expected_component_dims;  // sorted ascending
  std::string expected_splits;                // "yes" / "no" / "undetermined"
};

const std::vector<CatalogEntry>& catalog();

/// nullptr when the name is unknown.
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace zda
