#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cliquerec {

struct RunConfig {
    std::string class_name;
    int n = 0;
    std::string protocol_id;
    std::string graph_spec = "all-members";  // file:PATH | member:IDX | all-members | all-graphs
    std::uint64_t seed = 1;
    std::uint64_t trials = 1;
    std::string format = "csv";  // csv | json
    std::optional<int> bandwidth_cap;
    std::string transcript_path;  // dump the run transcript; single graph, single trial only
};

// Prints the class members of size n in canonical order. Returns 0, or 2 on
// a usage error.
int cmd_enumerate(std::ostream& out, std::ostream& err, const std::string& class_name, int n);

// Executes runs per config and writes one summary row per graph. Returns 0
// normally, 1 when a bandwidth or consistency violation occurred, 2 on a
// usage error.
int cmd_run(std::ostream& out, std::ostream& err, const RunConfig& config);

// Dispatches oracle suites (lemma1 | distance | protocols | hereditary |
// all), emitting one JSON line per report. Returns 0 iff all pass.
int cmd_verify(std::ostream& out, std::ostream& err, const std::string& suite,
               const std::vector<std::string>& class_filter);

}  // namespace cliquerec
