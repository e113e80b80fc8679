#ifndef D2D_MANIFEST_HPP
#define D2D_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace d2d {

inline constexpr const char* kToolVersion = "0.1.0";

// Reproducibility record for one CLI invocation: full parameter echo, master
// seed and timestamps. Serialized as ordered key=value lines.
struct RunManifest {
  std::string tool_version;
  std::string command;
  std::uint64_t master_seed = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::string started_at;
  std::string finished_at;

  bool operator==(const RunManifest&) const = default;
};

std::string serialize_manifest(const RunManifest& manifest);
RunManifest parse_manifest(const std::string& text);

// Current UTC time as ISO-8601 (e.g. 2026-08-08T12:00:00Z).
std::string utc_timestamp();

}  // namespace d2d

#endif  // D2D_MANIFEST_HPP
