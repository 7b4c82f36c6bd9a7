#include "knotforge/cli/cache.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include <unistd.h>

#include "knotforge/cli/json_io.hpp"

namespace knotforge::cli {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string engine_version)
    : dir_(std::move(dir)), engine_(std::move(engine_version)) {}

ResultCache ResultCache::from_flag_or_env(const std::string& flag_dir, std::string engine_version) {
  if (!flag_dir.empty()) return ResultCache(flag_dir, std::move(engine_version));
  if (const char* env = std::getenv("KNOTFORGE_CACHE"); env != nullptr && *env != '\0') {
    return ResultCache(env, std::move(engine_version));
  }
  return ResultCache();
}

std::string ResultCache::key(std::string_view operation, std::string_view canonical_input) const {
  std::string material;
  material.append(operation).push_back('\0');
  material.append(canonical_input).push_back('\0');
  material.append(engine_);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(material)));
  return buf;
}

std::optional<std::string> ResultCache::get(std::string_view operation, std::string_view canonical_input) const {
  if (!enabled()) return std::nullopt;
  const auto path = dir_ / (key(operation, canonical_input) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const Json rec = Json::parse(in);
    if (rec.at("operation").get<std::string>() != operation || rec.at("input").get<std::string>() != canonical_input ||
        rec.at("engine").get<std::string>() != engine_) {
      return std::nullopt;
    }
    return rec.at("value").get<std::string>();
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::put(std::string_view operation, std::string_view canonical_input, const std::string& value) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  const std::string k = key(operation, canonical_input);
  const Json rec{{"key", k},
                 {"operation", std::string(operation)},
                 {"input", std::string(canonical_input)},
                 {"engine", engine_},
                 {"created_at", stamp},
                 {"value", value}};
  // Write then rename so concurrent readers never see a partial record.
  const auto tmp = dir_ / (k + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << rec.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, dir_ / (k + ".json"), ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace knotforge::cli
