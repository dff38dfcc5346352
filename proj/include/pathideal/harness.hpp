#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathideal/bigint.hpp"

namespace pathideal {

// One verification cell: a named check at parameters (n, t, s), the engine
// value, the closed-form value, the independent-oracle value (may be
// empty), the agreement flag and the wall time. s is 0 for checks without a
// power parameter.
struct CheckRecord {
    std::string check;
    int n = 0;
    int t = 0;
    int s = 0;
    std::string engine;
    std::string formula;
    std::string oracle;
    bool match = false;
    long long ms = 0;
};

struct VerificationReport {
    std::vector<CheckRecord> records;

    bool all_match() const;
    int mismatch_count() const;
    // deterministic ordering: (check, n, t, s)
    void sort_records();
    std::string to_csv() const;
    std::string to_json() const;   // array of objects, schema-ordered keys
    std::string to_markdown() const;
};

// "4", "2..8" or "1..n" (the upper bound tracks the current n).
struct Range {
    int lo = 1;
    int hi = 1;
    bool hi_is_n = false;

    static Range parse(const std::string& text);
    int resolve_hi(int n) const { return hi_is_n ? n : hi; }
};

enum class Scope { all, mult, ass, covers, pd, recursions, counts };
Scope parse_scope(const std::string& name);
std::string scope_name(Scope scope);

struct HarnessConfig {
    int jobs = 0;           // 0 = hardware concurrency
    bool oracle = false;    // force extra independent cross-checks
    bool no_cache = false;  // ignore any configured disk cache
    std::string cache_dir;  // on-disk K-polynomial cache ("" = disabled)

    // Built-in defaults overlaid with the JSON file named by
    // PATHIDEAL_LAB_CONFIG, then PATHIDEAL_LAB_CACHE_DIR. Command-line
    // flags are applied on top by the caller.
    static HarnessConfig from_environment();
    // Install the disk-cache setting into the Hilbert engine.
    void apply_cache() const;
};

struct VerifyRequest {
    Scope scope = Scope::all;
    std::optional<Range> n;
    std::optional<Range> t;
    std::optional<Range> s;
    HarnessConfig config;
};

// Runs the scope's checks over the requested (or default) ranges on a
// worker pool. Throws std::invalid_argument naming the cap for
// out-of-range requests.
VerificationReport run_verify(const VerifyRequest& request);

// Engine-vs-closed-form tables. quantity: mult | pd | deg | height;
// format: csv | md | json. Output is bit-identical across runs.
std::string run_table(const std::string& quantity, std::optional<Range> n_range,
                      std::optional<Range> t_range, std::optional<Range> s_range,
                      const std::string& format, const HarnessConfig& config);

// Objects printed by the show command: ideal | dual | covers | kpoly |
// qpoly | betti | decomposition. format: text | json (betti: md | json).
std::string run_show(const std::string& object, int n, int t, int s,
                     const std::string& format);

}  // namespace pathideal
