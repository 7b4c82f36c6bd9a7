#include "knotforge/cli/catalog.hpp"

#include <algorithm>

#include "knotforge/cli/json_io.hpp"
#include "knotforge/error.hpp"

namespace knotforge::cli {

CatalogEntry load_catalog_entry(const std::filesystem::path& file) {
  const Json j = read_json_file(file);
  if (!j.is_object()) raise(ErrorCode::ParseError, file.string() + ": catalog entry must be an object");
  CatalogEntry e;
  e.name = j.value("name", file.stem().string());
  e.provenance = j.value("provenance", "");
  if (j.contains("grid")) {
    Json g = j.at("grid");
    if (!g.contains("name")) g["name"] = e.name;
    e.grid = grid_from_json(g);
  }
  if (j.contains("seifert")) e.seifert = seifert_from_json(Json{{"matrix", j.at("seifert")}}).matrix;
  if (j.contains("braid")) e.braid = braid_from_json(j.at("braid"));
  if (e.presentations() == 0) raise(ErrorCode::ParseError, file.string() + ": entry has no presentation");
  return e;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) raise(ErrorCode::ParseError, "catalog directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.is_regular_file() && f.path().extension() == ".json") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (const auto& f : files) out.push_back(load_catalog_entry(f));
  return out;
}

CatalogEntry find_catalog_entry(const std::filesystem::path& dir, const std::string& name) {
  const auto direct = dir / (name + ".json");
  if (std::filesystem::exists(direct)) return load_catalog_entry(direct);
  for (auto& e : load_catalog(dir)) {
    if (e.name == name) return e;
  }
  raise(ErrorCode::ParseError, "no catalog entry named '" + name + "'");
}

VerifyResult verify_entry(const CatalogEntry& e, const HomologyLimits& limits) {
  VerifyResult r;
  r.name = e.name;
  try {
    if (e.seifert) r.routes.push_back({"seifert", alexander_polynomial(*e.seifert)});
    if (e.braid) r.routes.push_back({"burau", burau_alexander(*e.braid)});
    if (e.grid) {
      const auto hat = hat_ranks(tilde_homology(*e.grid, limits), e.grid->size());
      r.routes.push_back({"hfk", genus_and_euler(hat).euler});
    }
  } catch (const Error& err) {
    r.error = err.what();
    r.agree = false;
    return r;
  }
  for (const auto& route : r.routes) r.agree = r.agree && route.alexander == r.routes.front().alexander;
  return r;
}

}  // namespace knotforge::cli
