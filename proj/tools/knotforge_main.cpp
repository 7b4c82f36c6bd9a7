#include <iostream>

#include "CLI11.hpp"
#include "knotforge/cli/commands.hpp"

namespace kc = knotforge::cli;

int main(int argc, char** argv) {
  CLI::App app{"knotforge: knot invariants from Seifert matrices, braids and grid diagrams"};
  app.require_subcommand(1);

  std::string catalog_dir = KNOTFORGE_DEFAULT_CATALOG;
  std::string cache_dir;
  std::uint64_t max_states = knotforge::HomologyLimits{}.max_states;
  std::uint64_t max_memory = knotforge::HomologyLimits{}.max_memory_bytes;
  unsigned threads = 1;
  bool json = false;
  app.add_option("--catalog-dir", catalog_dir, "Catalog directory")->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "Result cache directory (default: $KNOTFORGE_CACHE, else no cache)");

  std::string input;
  auto* alex = app.add_subcommand("alex", "Alexander polynomial of a Seifert matrix, braid or grid");
  alex->add_option("input", input, "JSON file or catalog:NAME")->required();

  auto* rho = app.add_subcommand("rho0", "Integral of the Levine-Tristram signature function");
  rho->add_option("input", input, "Seifert matrix or braid JSON file, or catalog:NAME")->required();

  auto* hfk = app.add_subcommand("hfk", "Knot Floer homology ranks of a grid diagram");
  hfk->add_option("input", input, "Grid JSON file or catalog:NAME")->required();
  hfk->add_option("--max-states", max_states, "State budget")->capture_default_str();
  hfk->add_option("--max-memory", max_memory, "Memory budget in bytes")->capture_default_str();
  hfk->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  hfk->add_option("--cache-dir", cache_dir, "Result cache directory");
  hfk->add_flag("--json", json, "Print the rank table as JSON");

  std::vector<std::string> derivatives;
  std::string grid;
  auto* dg = app.add_subcommand("dg", "Lower bound on the differential genus of a genus one knot");
  dg->add_option("input", input, "Seifert matrix JSON file or catalog:NAME")->required();
  dg->add_option("--derivative", derivatives, "Derivative JSON file {\"class\": [p,q], \"braid\": {...}}");
  dg->add_option("--grid", grid, "Grid JSON file or catalog:NAME for the surface uniqueness check");
  dg->add_option("--max-states", max_states, "State budget for --grid")->capture_default_str();
  dg->add_option("--threads", threads, "Worker threads for --grid")->capture_default_str();
  dg->add_flag("--json", json, "Print the report as JSON");

  std::string out_path;
  auto* csv = app.add_subcommand("signature-csv", "Export the signature function as CSV");
  csv->add_option("input", input, "Seifert matrix or braid JSON file, or catalog:NAME")->required();
  csv->add_option("--out", out_path, "Output file (default: standard output)");

  std::int64_t m = 0;
  auto* family = app.add_subcommand("family", "Genus one family with Seifert form ((m,-2),(-1,0))");
  family->add_option("--m", m, "Matrix entry m (m = 3n gives K_n)")->required();

  auto* catalog = app.add_subcommand("catalog", "Catalog maintenance");
  auto* verify = catalog->add_subcommand("verify", "Cross-check Alexander polynomials of every catalog entry");
  catalog->require_subcommand(1);
  verify->add_option("--max-states", max_states, "State budget")->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kc::kExitParse;
  }

  kc::Context ctx;
  ctx.catalog_dir = catalog_dir;
  ctx.cache = kc::ResultCache::from_flag_or_env(cache_dir, KNOTFORGE_ENGINE_VERSION);
  ctx.limits.max_states = max_states;
  ctx.limits.max_memory_bytes = max_memory;
  ctx.limits.threads = threads;
  ctx.json = json;

  if (*alex) return kc::cmd_alex(input, ctx, std::cout, std::cerr);
  if (*rho) return kc::cmd_rho0(input, ctx, std::cout, std::cerr);
  if (*hfk) return kc::cmd_hfk(input, ctx, std::cout, std::cerr);
  if (*dg) {
    return kc::cmd_dg(input, derivatives, grid.empty() ? std::nullopt : std::optional<std::string>(grid), ctx,
                      std::cout, std::cerr);
  }
  if (*csv) return kc::cmd_signature_csv(input, out_path, ctx, std::cout, std::cerr);
  if (*family) return kc::cmd_family(m, ctx, std::cout, std::cerr);
  if (*verify) return kc::cmd_catalog_verify(ctx, std::cout, std::cerr);
  return kc::kExitParse;
}
