#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "knotforge/cli/cache.hpp"
#include "knotforge/grid_homology.hpp"
#include "knotforge/seifert.hpp"

namespace knotforge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitInvariant = 3,
  kExitResources = 4,
};

struct Context {
  std::filesystem::path catalog_dir = KNOTFORGE_DEFAULT_CATALOG;
  ResultCache cache;
  HomologyLimits limits;
  bool json = false;
};

/// Runs fn and maps exceptions to exit codes, writing the message to err.
int guarded(std::ostream& err, const std::function<int()>& fn);

// Inputs are JSON file paths or "catalog:NAME".
int cmd_alex(const std::string& input, const Context& ctx, std::ostream& out, std::ostream& err);
int cmd_rho0(const std::string& input, const Context& ctx, std::ostream& out, std::ostream& err);
int cmd_hfk(const std::string& input, const Context& ctx, std::ostream& out, std::ostream& err);
int cmd_dg(const std::string& seifert_input, const std::vector<std::string>& derivative_files,
           const std::optional<std::string>& grid_input, const Context& ctx, std::ostream& out, std::ostream& err);
/// Writes to out_path, or to out when out_path is empty.
int cmd_signature_csv(const std::string& input, const std::string& out_path, const Context& ctx, std::ostream& out,
                      std::ostream& err);
int cmd_family(std::int64_t m, const Context& ctx, std::ostream& out, std::ostream& err);
int cmd_catalog_verify(const Context& ctx, std::ostream& out, std::ostream& err);

/// "-4/3 (±1e-9)", "0", or a decimal with its bound.
std::string format_rho0(const Rho0& rho);

/// Rank table with Alexander rows descending and Maslov columns ascending.
std::string format_rank_table(const BigradedRanks& hat);

/// Hat ranks of a grid, through the cache when enabled.
BigradedRanks cached_hat_ranks(const GridDiagram& g, const Context& ctx);

}  // namespace knotforge::cli
