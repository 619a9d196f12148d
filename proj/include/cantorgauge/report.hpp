#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cantorgauge/catalog.hpp"
#include "cantorgauge/gauge.hpp"
#include "cantorgauge/hypotheses.hpp"
#include "cantorgauge/measure.hpp"

namespace cantorgauge {

using Json = nlohmann::json;

/// One run's configuration. Round-trips through JSON; invalid combinations
/// are rejected at parse time, before any computation.
struct RunConfig {
    std::string command;          // check | estimate | staircase | reproduce | info
    std::string family;           // family grammar, or table:PATH
    std::string gauge;            // gauge grammar; empty = family's paired gauge
    std::optional<Region> region; // default: the root hull
    double eps = 0.01;
    int level_lo = 4;
    int level_hi = 12;
    int depth = 10;               // DP resolution / geometry truncation
    int max_m = 8;
    int max_word_len = 10;
    int k_min = 6;
    int k_max = 12;
    std::string word;             // staircase root word ("-" = root)
    std::string out_path;
    std::string format = "text";  // text | structured
    int threads = 1;

    Json to_json() const;
    static RunConfig from_json(const Json& j);
};

/// Full-precision decimal rendering (17 significant digits).
std::string format_full(double v);

Json to_json(const Bracket& b);
Json to_json(const Witness& w);
Json to_json(const ConditionReport& r);
Json to_json(const MassRatioBounds& qr);
Json to_json(const MeasureEstimate& e);
Json to_json(const CoverSolution& c);

/// Exit code as a pure function of report contents: 2 if any check fails or
/// any reproduction row misses, 3 if any check is indeterminate, else 0.
/// Re-running this on a saved report reproduces the process exit code.
int exit_code_for(const Json& report);

}  // namespace cantorgauge
