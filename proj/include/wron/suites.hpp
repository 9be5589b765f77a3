#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace wron {

enum class SuiteFormat { Csv, Json };

struct SuiteConfig {
    std::string suite = "all";
    int n_max = 6;
    int k_max = 8;
    double tol = 1e-10;
    std::string output_path;  // empty: stdout only
    SuiteFormat format = SuiteFormat::Csv;
    int threads = 0;  // 0: hardware concurrency
    unsigned long seed = 12345;
};

struct CellRecord {
    int n = 0;
    int k = 0;
    bool pass = false;
    std::string detail;           // deterministic, comma-free
    nlohmann::json extra;         // merged into the JSON emission only
};

struct SuiteReport {
    std::string suite;
    std::vector<CellRecord> cells;
    int passed = 0;
    int failed = 0;
    long wall_time_ms = 0;
};

const std::vector<std::string>& suite_names();  // includes "all"

// Runs one named suite (not "all") over its grid, cells evaluated in
// parallel but reduced in deterministic (n,k) order. Throws ConfigError on
// bad bounds or unknown names.
SuiteReport run_suite(const SuiteConfig& config);

// Expands "all" into every concrete suite (bounds clamped to each suite's
// guard); otherwise a single-element vector.
std::vector<SuiteReport> run_suites(const SuiteConfig& config);

// CSV ("n,k,pass,detail" rows) or JSON lines; byte-stable for identical
// report content.
std::string emit_table(const SuiteReport& report, SuiteFormat format);
std::string emit_tables(const std::vector<SuiteReport>& reports, SuiteFormat format);

// Writes the emitted table to config.output_path (IoError on failure); no-op
// when the path is empty.
void write_report_file(const std::vector<SuiteReport>& reports, const SuiteConfig& config);

}  // namespace wron
