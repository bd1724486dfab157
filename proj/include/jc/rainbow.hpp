#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jc/coloring.hpp"
#include "jc/graph.hpp"

namespace jc {

enum class Mode { all_vertices, internal_only };

// Default order cap for the all-k profile sweep.
inline constexpr int default_profile_cap = 12;

// True iff the colour set of N[v] is exactly {1..k}.  The colouring must
// be proper.
bool is_rainbow_vertex(const Graph& g, const Colouring& c, int v);

struct RainbowCount {
    int canonical = 0;                   // under the canonical chi^- colouring
    std::vector<int> canonical_vertices;
    int min_over_chi = 0;                // over all proper chi-colourings
    int max_over_chi = 0;
};

// r_chi under the canonical chi^- colouring plus the min/max attainable
// counts over every proper chi-colouring (exhaustive, order-capped).
RainbowCount rainbow_neighbourhood_number(const Graph& g, int cap = default_profile_cap);

// Proper k-colouring using all k colours in which every required vertex
// (all, or internal-only) is rainbow; lexicographically least assignment,
// or nullopt when none exists.
std::optional<Colouring> find_rainbow_colouring(const Graph& g, int k, Mode mode);

struct JProfile {
    Mode mode = Mode::all_vertices;
    std::vector<int> feasible_k;
    std::map<int, Colouring> witnesses;
    std::optional<int> j_value;  // nullopt = inadmissible
};

// Feasibility of every k from 1 to the degree bound.  Disconnected graphs:
// k is feasible iff it is feasible for every component.  Edgeless graphs
// take the convention J = J* = 1.
JProfile j_profile(const Graph& g, Mode mode, int cap = default_profile_cap);

std::optional<int> j_number(const Graph& g, int cap = default_profile_cap);
std::optional<int> j_star_number(const Graph& g, int cap = default_profile_cap);

// Decision procedure without the profile sweep; used where only one k
// matters (extremal search).  No order cap.
bool rainbow_feasible(const Graph& g, int k, Mode mode);

// The diameter-path construction for trees: proper, at most 3 colours,
// every internal vertex rainbow on 3 colours.
Colouring tree_jstar_colouring(const Graph& tree);

}  // namespace jc
