#include "d2d/manifest.hpp"

#include <ctime>
#include <sstream>
#include <stdexcept>

namespace d2d {

std::string serialize_manifest(const RunManifest& manifest) {
  std::ostringstream out;
  out << "version=" << manifest.tool_version << "\n";
  out << "command=" << manifest.command << "\n";
  out << "seed=" << manifest.master_seed << "\n";
  out << "started_at=" << manifest.started_at << "\n";
  out << "finished_at=" << manifest.finished_at << "\n";
  for (const auto& [key, value] : manifest.params) out << "param." << key << "=" << value << "\n";
  return out.str();
}

RunManifest parse_manifest(const std::string& text) {
  RunManifest manifest;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("manifest: malformed line '" + line + "'");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "version")
      manifest.tool_version = value;
    else if (key == "command")
      manifest.command = value;
    else if (key == "seed")
      manifest.master_seed = std::stoull(value);
    else if (key == "started_at")
      manifest.started_at = value;
    else if (key == "finished_at")
      manifest.finished_at = value;
    else if (key.rfind("param.", 0) == 0)
      manifest.params.emplace_back(key.substr(6), value);
    else
      throw std::runtime_error("manifest: unknown key '" + key + "'");
  }
  return manifest;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace d2d
