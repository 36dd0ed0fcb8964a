#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace syang {

/// Hex SHA-256 digest of a byte string.
std::string sha256_hex(const std::string& data);

inline const char* kKernelVersion = "0.1.0";

/// Content-addressed result cache keyed by the canonical manifest. Writes go
/// through a temp file and an atomic rename.
class ResultCache {
public:
    /// dir from SYANG_CACHE_DIR when set, else ./.syang-cache
    static std::filesystem::path default_dir();

    explicit ResultCache(std::filesystem::path dir);

    static std::string key_of(const nlohmann::json& manifest);

    std::optional<nlohmann::json> lookup(const std::string& key) const;
    void store(const std::string& key, const nlohmann::json& record) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

} // namespace syang
