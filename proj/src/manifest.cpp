#include "endsum/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

#include "endsum/errors.hpp"
#include "endsum/version.hpp"
#include "json.hpp"

namespace endsum {

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file for digest: " + path.string());

  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw ConfigError("SHA-256 init failed");
  }
  std::array<char, 1 << 16> buffer;
  while (in) {
    in.read(buffer.data(), buffer.size());
    std::streamsize got = in.gcount();
    if (got > 0 &&
        EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(got)) != 1) {
      throw ConfigError("SHA-256 update failed");
    }
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw ConfigError("SHA-256 final failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

std::string RunManifest::to_json() const {
  std::string out = "{\"tool\":" + nlohmann::json(std::string(kToolName)).dump() +
                    ",\"version\":" + nlohmann::json(std::string(kVersion)).dump() +
                    ",\"command\":" + nlohmann::json(command).dump() + ",\"inputs\":[";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) out += ',';
    out += "{\"role\":" + nlohmann::json(inputs[i].role).dump() +
           ",\"path\":" + nlohmann::json(inputs[i].path).dump() +
           ",\"sha256\":\"" + inputs[i].sha256 + "\"}";
  }
  out += "],\"params\":{";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += nlohmann::json(params[i].first).dump() + ":" + params[i].second;
  }
  out += "},\"duration_ms\":" + std::to_string(duration_ms) + "}";
  return out;
}

}  // namespace endsum
