#pragma once

// Append-only count cache: one JSON record per line, keyed by (pattern, n).
// Duplicate keys are tolerated (last writer wins) because correct values are
// equal by construction.

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "rdl/core.hpp"

namespace rdl {

inline constexpr const char* kToolVersion = "1.0.0";

struct CacheRecord {
    std::string pattern;  // canonical comma-separated digits
    int n = 0;
    std::string count;  // exact decimal text
    std::string method;
    std::string tool_version;
    std::string timestamp;  // ISO 8601, UTC
};

// Comma-separated digits regardless of length, so patterns of length >= 10
// cache under the same convention as short ones.
inline std::string canonical_pattern_key(const Permutation& p) {
    std::string out;
    for (int i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.digits()[static_cast<size_t>(i)]);
    }
    return out;
}

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class CountCache {
  public:
    // Precedence: explicit flag, then RDL_CACHE_DIR, then the per-user
    // default (XDG cache home or ~/.cache) under rdl/.
    static std::filesystem::path resolve_dir(const std::string& flag_dir) {
        if (!flag_dir.empty()) return flag_dir;
        if (const char* env = std::getenv("RDL_CACHE_DIR"); env && *env) return env;
        if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
            return std::filesystem::path(xdg) / "rdl";
        if (const char* home = std::getenv("HOME"); home && *home)
            return std::filesystem::path(home) / ".cache" / "rdl";
        return std::filesystem::temp_directory_path() / "rdl-cache";
    }

    explicit CountCache(std::filesystem::path dir)
        : file_(std::move(dir) / "counts.jsonl") {
        std::ifstream in(file_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
            if (j.is_discarded() || !j.is_object()) continue;  // skip torn lines
            CacheRecord rec;
            rec.pattern = j.value("pattern", "");
            rec.n = j.value("n", 0);
            rec.count = j.value("count", "");
            rec.method = j.value("method", "");
            rec.tool_version = j.value("tool_version", "");
            rec.timestamp = j.value("timestamp", "");
            if (rec.pattern.empty() || rec.count.empty()) continue;
            records_[{rec.pattern, rec.n}] = std::move(rec);
        }
    }

    const std::filesystem::path& file() const { return file_; }

    std::optional<CacheRecord> lookup(const std::string& pattern_key, int n) const {
        auto it = records_.find({pattern_key, n});
        if (it == records_.end()) return std::nullopt;
        return it->second;
    }

    void store(const CacheRecord& rec) {
        std::filesystem::create_directories(file_.parent_path());
        nlohmann::json j{{"pattern", rec.pattern}, {"n", rec.n},
                         {"count", rec.count},     {"method", rec.method},
                         {"tool_version", rec.tool_version}, {"timestamp", rec.timestamp}};
        std::ofstream out(file_, std::ios::app);
        if (!out) throw std::runtime_error("cannot open cache file: " + file_.string());
        out << j.dump() << '\n';
        records_[{rec.pattern, rec.n}] = rec;
    }

    size_t size() const { return records_.size(); }

  private:
    std::filesystem::path file_;
    std::map<std::pair<std::string, int>, CacheRecord> records_;
};

}  // namespace rdl
