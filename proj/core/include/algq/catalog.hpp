#pragma once

// Named example algebroids and finite groupoids; the fixture set used by the
// property suites and exported as schema files by the CLI.

#include "algq/algebroid.hpp"
#include "algq/groupoid.hpp"

#include <string>
#include <vector>

namespace algq {

struct CatalogEntry {
  std::string name;
  std::string kind;  // "algebroid" or "finite-groupoid"
  std::string summary;
  AlgebroidRef algebroid;  // set when kind == "algebroid"
  GroupoidRef groupoid;    // set when kind == "finite-groupoid"
};

const std::vector<CatalogEntry>& catalog();

AlgebroidRef catalog_algebroid(const std::string& name);
GroupoidRef catalog_groupoid(const std::string& name);

}  // namespace algq
