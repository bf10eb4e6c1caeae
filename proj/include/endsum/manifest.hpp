#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace endsum {

// Hex SHA-256 of a file's bytes. Throws ConfigError when unreadable.
std::string sha256_file(const std::filesystem::path& path);

// Reproducibility record written next to every produced output. Two runs
// with identical inputs and config differ only in duration_ms.
struct RunManifest {
  struct Input {
    std::string role;  // "input", "candidate", ...
    std::string path;
    std::string sha256;
  };

  std::string command;
  std::vector<Input> inputs;
  // Ordered (key, already-encoded JSON value) pairs echoing the config.
  std::vector<std::pair<std::string, std::string>> params;
  std::int64_t duration_ms = 0;

  std::string to_json() const;
};

}  // namespace endsum
