#include "knotforge/cli/json_io.hpp"

#include <fstream>

#include "knotforge/error.hpp"

namespace knotforge::cli {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    raise(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

std::string optional_name(const Json& j) { return j.contains("name") ? get_field<std::string>(j, "name") : ""; }

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    raise(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

NamedSeifert seifert_from_json(const Json& j) {
  const auto rows = get_field<std::vector<std::vector<std::int64_t>>>(j, "matrix");
  for (const auto& r : rows) {
    if (r.size() != rows.size()) raise(ErrorCode::ParseError, "Seifert matrix must be square");
  }
  return NamedSeifert{optional_name(j), SeifertMatrix(IntMatrix::from_rows(rows))};
}

BraidWord braid_from_json(const Json& j) {
  return BraidWord(get_field<int>(j, "strands"), get_field<std::vector<int>>(j, "word"));
}

GridDiagram grid_from_json(const Json& j) {
  GridDiagram g{optional_name(j), get_field<std::vector<int>>(j, "X"), get_field<std::vector<int>>(j, "O")};
  if (j.contains("size") && get_field<std::size_t>(j, "size") != g.x.size()) {
    raise(ErrorCode::ParseError, "grid 'size' does not match the length of X");
  }
  return validate_grid(g);
}

DerivativeInput derivative_from_json(const Json& j) {
  const auto cls = get_field<std::vector<std::int64_t>>(j, "class");
  if (cls.size() != 2) raise(ErrorCode::ParseError, "'class' must be [p, q]");
  DerivativeInput d;
  d.cls = MetabolizerClass::normalized(cls[0], cls[1]);
  if (j.contains("braid")) d.braid = braid_from_json(j.at("braid"));
  if (j.contains("genus")) d.genus_s3_exact = get_field<int>(j, "genus");
  return d;
}

Input parse_input(const Json& j) {
  if (!j.is_object()) raise(ErrorCode::ParseError, "input must be a JSON object");
  if (j.contains("matrix")) return seifert_from_json(j);
  if (j.contains("strands")) return braid_from_json(j);
  if (j.contains("X")) return grid_from_json(j);
  if (j.contains("class")) return derivative_from_json(j);
  raise(ErrorCode::ParseError, "unrecognized input: expected one of 'matrix', 'strands', 'X', 'class'");
}

Json to_json(const NamedSeifert& s) { return Json{{"name", s.name}, {"matrix", s.matrix.matrix().to_rows()}}; }

Json to_json(const BraidWord& b) { return Json{{"strands", b.strands()}, {"word", b.word()}}; }

Json to_json(const GridDiagram& g) { return Json{{"name", g.name}, {"size", g.size()}, {"X", g.x}, {"O", g.o}}; }

Json to_json(const DerivativeInput& d) {
  Json j{{"class", {d.cls.p, d.cls.q}}};
  if (d.braid) j["braid"] = to_json(*d.braid);
  if (d.genus_s3_exact) j["genus"] = *d.genus_s3_exact;
  return j;
}

Json ranks_to_json(const BigradedRanks& hat) {
  Json ranks = Json::array();
  for (const auto& [k, r] : hat.entries()) ranks.push_back(Json{{"M", k.first}, {"A", k.second}, {"rank", r}});
  const GenusEuler ge = genus_and_euler(hat);
  return Json{{"ranks", ranks}, {"genus", ge.genus}, {"euler", ge.euler.to_string()}};
}

BigradedRanks ranks_from_json(const Json& j) {
  BigradedRanks out;
  const auto arr = get_field<Json>(j, "ranks");
  if (!arr.is_array()) raise(ErrorCode::ParseError, "'ranks' must be an array");
  for (const auto& e : arr) {
    const auto r = get_field<std::int64_t>(e, "rank");
    if (r <= 0) raise(ErrorCode::ParseError, "ranks must be positive");
    out.add(get_field<int>(e, "M"), get_field<int>(e, "A"), static_cast<std::uint64_t>(r));
  }
  return out;
}

}  // namespace knotforge::cli
