#include "mzvlab/report_io.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

namespace mzvlab {

nlohmann::json report_to_json(const VerificationReport& r, int digits) {
    nlohmann::json j;
    j["id"] = r.id;
    j["params"] = r.params;
    j["lhs"] = render(r.lhs, digits);
    j["rhs"] = render(r.rhs, digits);
    j["abs_diff"] = render(r.abs_diff, 3);
    j["tolerance"] = render(r.tolerance, 3);
    j["bound"] = render(r.bound, 3);
    j["passed"] = r.passed;
    j["terms_used"] = r.terms_used;
    j["seconds"] = r.seconds;
    if (r.conjecture) j["status"] = "conjecture";
    return j;
}

std::string report_csv_header() {
    return "id,params,lhs,rhs,abs_diff,tolerance,bound,passed,terms_used,seconds";
}

std::string report_to_csv(const VerificationReport& r, int digits) {
    std::ostringstream os;
    os << r.id << ",\"" << r.params << "\"," << render(r.lhs, digits) << ','
       << render(r.rhs, digits) << ',' << render(r.abs_diff, 3) << ','
       << render(r.tolerance, 3) << ',' << render(r.bound, 3) << ','
       << (r.passed ? "true" : "false") << ',' << r.terms_used << ','
       << r.seconds;
    return os.str();
}

std::string report_to_text(const VerificationReport& r, int digits) {
    std::ostringstream os;
    os << (r.conjecture ? (r.passed ? "[conj]" : "[CONJ]")
                        : (r.passed ? "[pass]" : "[FAIL]"))
       << ' ' << r.id;
    if (!r.params.empty()) os << " {" << r.params << "}";
    os << "  |lhs-rhs| = " << render(r.abs_diff, 3)
       << "  (tol " << render(r.tolerance, 3) << ", bound "
       << render(r.bound, 3) << ")";
    (void)digits;
    return os.str();
}

ValueCache::ValueCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const nlohmann::json j = nlohmann::json::parse(line);
            CacheEntry e;
            e.expr = j.value("expr", "");
            e.digits = j.value("digits", 0);
            e.value = j.value("value", "");
            e.bound = j.value("bound", "");
            e.bound_kind = j.value("bound_kind", "");
            e.timestamp = j.value("timestamp", "");
            if (!e.expr.empty()) entries_.push_back(std::move(e));
        } catch (const nlohmann::json::exception&) {
            // ignore malformed lines; the file is append-only
        }
    }
}

std::optional<CacheEntry> ValueCache::lookup(const std::string& expr,
                                             int digits) const {
    // last entry wins
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        if (it->expr == expr && it->digits >= digits) return *it;
    return std::nullopt;
}

void ValueCache::append(const CacheEntry& entry) {
    entries_.push_back(entry);
    nlohmann::json j;
    j["expr"] = entry.expr;
    j["digits"] = entry.digits;
    j["value"] = entry.value;
    j["bound"] = entry.bound;
    j["bound_kind"] = entry.bound_kind;
    j["timestamp"] = entry.timestamp;
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << '\n';
}

void ValueCache::clear() {
    entries_.clear();
    std::ofstream out(path_, std::ios::trunc);
}

std::string default_cache_path() {
    if (const char* env = std::getenv("MZVLAB_CACHE")) return env;
    return "mzvlab_cache.jsonl";
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc;
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace mzvlab
