#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pgs2s {

// Flat key-value configuration with dotted keys (task.horizon, reward.alpha,
// pg.epsilon, ...). Every key has a registered default; setting an unknown
// key is a ConfigError. Files are `key = value` lines, '#' comments.
class Config {
  public:
    Config();  // all defaults

    static const std::map<std::string, std::string>& defaults();

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const { return kv_.count(key) > 0; }

    const std::string& get(const std::string& key) const;
    double get_double(const std::string& key) const;
    std::int64_t get_int(const std::string& key) const;
    std::size_t get_size(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    // comma-separated lists
    std::vector<std::string> get_list(const std::string& key) const;
    std::vector<std::uint64_t> get_seed_list(const std::string& key) const;

    void load_file(const std::string& path);
    void apply_override(const std::string& assignment);  // "key=value"
    void dump(const std::string& path) const;
    std::string dump_string() const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
};

}  // namespace pgs2s
