#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace knotforge::cli {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);

/// One JSON file per record, named by the hash of (operation, canonical
/// input, engine version). The record repeats its key material and a read
/// only hits when all of it matches.
class ResultCache {
 public:
  /// Disabled cache.
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path dir, std::string engine_version);

  /// Directory from the flag, else from KNOTFORGE_CACHE, else disabled.
  static ResultCache from_flag_or_env(const std::string& flag_dir, std::string engine_version);

  bool enabled() const noexcept { return !dir_.empty(); }
  const std::filesystem::path& dir() const noexcept { return dir_; }

  std::string key(std::string_view operation, std::string_view canonical_input) const;
  std::optional<std::string> get(std::string_view operation, std::string_view canonical_input) const;
  void put(std::string_view operation, std::string_view canonical_input, const std::string& value) const;

 private:
  std::filesystem::path dir_;
  std::string engine_;
};

}  // namespace knotforge::cli
