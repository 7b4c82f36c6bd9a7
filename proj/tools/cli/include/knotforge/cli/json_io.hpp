#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"
#include "knotforge/braid.hpp"
#include "knotforge/grid.hpp"
#include "knotforge/grid_homology.hpp"
#include "knotforge/seifert.hpp"
#include "knotforge/slice.hpp"

namespace knotforge::cli {

using Json = nlohmann::json;

struct NamedSeifert {
  std::string name;
  SeifertMatrix matrix;
};

using Input = std::variant<NamedSeifert, BraidWord, GridDiagram, DerivativeInput>;

/// Reads and parses a JSON file. Throws ParseError.
Json read_json_file(const std::filesystem::path& path);

/// Dispatches on keys: "matrix" (Seifert), "strands" (braid), "X" (grid),
/// "class" (derivative). Throws ParseError, or the validation error of the
/// presentation.
Input parse_input(const Json& j);

NamedSeifert seifert_from_json(const Json& j);
BraidWord braid_from_json(const Json& j);
GridDiagram grid_from_json(const Json& j);
DerivativeInput derivative_from_json(const Json& j);

Json to_json(const NamedSeifert& s);
Json to_json(const BraidWord& b);
Json to_json(const GridDiagram& g);
Json to_json(const DerivativeInput& d);

/// {"ranks": [{"M", "A", "rank"}], "genus", "euler"}.
Json ranks_to_json(const BigradedRanks& hat);
BigradedRanks ranks_from_json(const Json& j);

}  // namespace knotforge::cli
