#ifndef MZVLAB_REPORT_IO_HPP
#define MZVLAB_REPORT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mzvlab/identities.hpp"

namespace mzvlab {

// Report record schema: {id, params, lhs, rhs, abs_diff, tolerance,
// bound, passed, terms_used, seconds}; CSV uses the same field order.
nlohmann::json report_to_json(const VerificationReport& r, int digits);
std::string report_csv_header();
std::string report_to_csv(const VerificationReport& r, int digits);
std::string report_to_text(const VerificationReport& r, int digits);

struct CacheEntry {
    std::string expr;  // canonical expression text
    int digits = 0;
    std::string value;
    std::string bound;
    std::string bound_kind;
    std::string timestamp;
};

// Line-delimited JSON, append-only, last entry wins on duplicate keys.
class ValueCache {
  public:
    explicit ValueCache(std::string path);

    // a hit requires stored digits >= the requested digits
    std::optional<CacheEntry> lookup(const std::string& expr, int digits) const;
    void append(const CacheEntry& entry);
    void clear();
    const std::vector<CacheEntry>& entries() const { return entries_; }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::vector<CacheEntry> entries_;
};

std::string default_cache_path();
std::string iso_timestamp();

}  // namespace mzvlab

#endif
