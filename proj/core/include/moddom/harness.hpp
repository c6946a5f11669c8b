#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moddom/graph.hpp"

namespace moddom {

struct RunConfig {
    enum class Mode { Compute, Verify, SearchP1, SearchP2, SearchP3 };
    enum class Format { Jsonl, Csv };

    Mode mode = Mode::Compute;
    std::vector<std::string> inputs;  // family specs or graph6 file paths
    int max_n = 4;
    std::optional<int> budget;
    int threads = 1;
    std::uint64_t seed = 0;
    std::string output;  // empty = stdout (handled by the CLI)
    Format format = Format::Jsonl;
    bool timings = false;          // adds timing fields (breaks byte determinism)
    bool connected_only = true;    // search modes: restrict enumeration
    bool diameter_filter = true;   // search-p3: keep only diameter-2 candidates
    bool selftest = false;         // verify: inject a failing check
};

/// Rendered report plus counters. The text is one record per line in the
/// requested format with a trailing summary record; identical config and seed
/// produce identical bytes (unless timings are enabled).
struct Report {
    std::string text;
    std::size_t checks = 0;
    std::size_t failures = 0;
};

/// Unusable input (bad family spec, unreadable file, malformed graph6...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

Report run_compute(const RunConfig& config);
Report run_verify(const RunConfig& config);
Report run_search_problem1(const RunConfig& config);
Report run_search_problem2(const RunConfig& config);
Report run_search_problem3(const RunConfig& config);
Report run(const RunConfig& config);

/// 0 when clean, 1 when the report carries failures.
int report_exit_code(const Report& r);

/// Expands one input token into (id, graph) pairs: a family spec yields one
/// graph, a graph6 file one per line.
std::vector<std::pair<std::string, Graph>> expand_input(const std::string& token);

}  // namespace moddom
