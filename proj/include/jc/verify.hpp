#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jc/graph.hpp"

namespace jc {

struct CorpusConfig {
    int path_min = 2, path_max = 10;
    int cycle_min = 3, cycle_max = 12;
    int complete_min = 1, complete_max = 8;
    int star_min = 2, star_max = 6;

    int tree_count = 20;
    int tree_min_order = 4, tree_max_order = 12;
    std::uint32_t tree_seed = 1;

    int random_count = 200;
    int random_max_order = 10;
    std::uint32_t random_seed = 42;

    int profile_cap = 12;    // order cap for plain J-profile sweeps
    int product_cap = 40;    // order cap for product / corona instances
    int extremal_edge_cap = 21;

    bool include_k9_example = true;

    static CorpusConfig from_json_text(const std::string& text);
};

struct ClaimRecord {
    std::string claim_id;
    std::string instance;
    std::string predicted;
    std::string computed;
    std::string verdict;  // confirmed | refuted | not-applicable
    bool report_only = false;
    bool hard = false;
    double runtime_ms = 0.0;
};

struct VerificationReport {
    std::vector<ClaimRecord> claims;  // sorted by claim id, then instance
    int confirmed = 0;
    int refuted = 0;
    int report_only = 0;

    bool hard_failure() const;
    // Deterministic for a fixed config: runtimes are omitted.
    std::string to_json() const;
    std::string to_text() const;
};

// Fixed list of catalogued claim ids; every id appears in every harness
// run.
const std::vector<std::string>& claim_catalogue();

VerificationReport run_verification(const CorpusConfig& config);

}  // namespace jc
