#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jc/graph.hpp"
#include "jc/rainbow.hpp"

namespace jc {

// Default edge cap for subset search.
inline constexpr int default_edge_cap = 21;

// `plain` evaluates J of the remainder with per-component semantics;
// `connected_for_k_ge_2` additionally requires the remainder to stay
// connected whenever the target k >= 2.
enum class RemovalSemantics { plain, connected_for_k_ge_2 };

struct ExtremalResult {
    int count = 0;
    std::vector<std::pair<int, int>> witness;  // lexicographically least optimum
};

// True iff J(g) == k under the given semantics.
bool j_equals(const Graph& g, int k, RemovalSemantics semantics);

// Exact min/max |E'| over subsets E' of E(G) with J(G - E') = k.  Returns
// nullopt when G does not admit a J-colouring (the variables are then
// undefined).  Throws scale_error beyond the edge cap.
std::optional<ExtremalResult> r_minus(const Graph& g, int k, RemovalSemantics semantics,
                                      int edge_cap = default_edge_cap);
std::optional<ExtremalResult> r_plus(const Graph& g, int k, RemovalSemantics semantics,
                                     int edge_cap = default_edge_cap);

struct BondingRow {
    int k = 0;
    std::optional<ExtremalResult> minus;
    std::optional<ExtremalResult> plus;
    // Stage reading: minimum removal relative to the previous row's
    // witness graph, and the running total of stage removals.
    std::optional<int> stage_minus;
    std::optional<int> cumulative_minus;
};

struct BondingProfile {
    RemovalSemantics semantics = RemovalSemantics::plain;
    std::vector<BondingRow> rows;  // k = J(G) down to 1
};

BondingProfile bonding_profile(const Graph& g, RemovalSemantics semantics,
                               int edge_cap = default_edge_cap);

struct RepairResult {
    std::vector<std::pair<int, int>> removed;
    int repaired_j = 0;
};

// Minimum-cardinality E'' with G - E'' admitting a J-colouring; empty when
// G already admits one.
RepairResult minimal_repair(const Graph& g, int edge_cap = default_edge_cap);

struct KnClosedForm {
    std::optional<int> r_minus;  // defined only for k >= ceil(n/2)
    int r_plus = 0;
};

KnClosedForm kn_bonding_closed_form(int n, int k);

// Minimum removal from an arbitrary base graph reaching J = k; used by the
// stage reading of bonding profiles.  nullopt when no subset qualifies.
std::optional<ExtremalResult> min_removal_to_j(const Graph& g, int k, RemovalSemantics semantics,
                                               int edge_cap = default_edge_cap);

}  // namespace jc
