#pragma once

#include <map>
#include <optional>
#include <string>

namespace foresight {

// Flat key=value configuration. '#' starts a comment, blank lines are
// ignored, whitespace around keys and values is trimmed. Flags override
// config values; environment variables carry secrets only.
class Config {
  public:
    Config() = default;

    static Config load(const std::string& path);
    // Loads the file named by FORESIGHT_CONFIG when set, otherwise returns
    // an empty config.
    static Config from_env();

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    std::string get(const std::string& key, const std::string& fallback = "") const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    const std::map<std::string, std::string>& values() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

}  // namespace foresight
