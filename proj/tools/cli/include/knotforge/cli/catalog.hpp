#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "knotforge/braid.hpp"
#include "knotforge/grid.hpp"
#include "knotforge/grid_homology.hpp"
#include "knotforge/seifert.hpp"

namespace knotforge::cli {

struct CatalogEntry {
  std::string name;
  std::optional<GridDiagram> grid;
  std::optional<SeifertMatrix> seifert;
  std::optional<BraidWord> braid;
  std::string provenance;

  std::size_t presentations() const { return (grid ? 1 : 0) + (seifert ? 1 : 0) + (braid ? 1 : 0); }
};

/// Parses one catalog file. Throws ParseError when no presentation is present.
CatalogEntry load_catalog_entry(const std::filesystem::path& file);

/// All *.json files of the directory, sorted by file name.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);

/// Entry whose name (or file stem) matches. Throws ParseError.
CatalogEntry find_catalog_entry(const std::filesystem::path& dir, const std::string& name);

struct RouteResult {
  std::string route;
  LaurentPoly alexander;
};

struct VerifyResult {
  std::string name;
  std::vector<RouteResult> routes;
  bool agree = true;
  /// Set when a route could not be computed.
  std::string error;
};

/// Alexander polynomial by every available route.
VerifyResult verify_entry(const CatalogEntry& e, const HomologyLimits& limits);

}  // namespace knotforge::cli
