#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace stylo {

// Flat key=value config file. '#' starts a comment, blank lines ignored.
class KvConfig {
public:
    KvConfig() = default;
    static KvConfig parse_file(const std::filesystem::path& path);
    static KvConfig parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback) const;
    std::string require(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    double get_double(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
    std::string origin_;
};

}  // namespace stylo
