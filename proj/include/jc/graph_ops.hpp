#pragma once

#include <optional>
#include <string>

#include "jc/graph.hpp"

namespace jc {

enum class DerivativeKind { complement, line, jump, middle, total, central, subdivision };
enum class CombineKind { disjoint_union, join, corona, cartesian };

// Composite vertex numbering is deterministic: original vertices first,
// then edge-vertices in sorted edge order (derivatives), or G's vertices
// first (binary operations; cartesian index is v * |H| + u).
Graph derive(const Graph& g, DerivativeKind kind);
Graph combine(const Graph& g, const Graph& h, CombineKind kind);

const char* to_string(DerivativeKind kind);
const char* to_string(CombineKind kind);
std::optional<DerivativeKind> derivative_kind_from_string(const std::string& s);
std::optional<CombineKind> combine_kind_from_string(const std::string& s);

enum class Family { path, cycle, complete, star, complete_bipartite, null_family, random_tree };
std::optional<Family> family_from_string(const std::string& s);
const char* to_string(Family f);

// One catalogued closed-form claim: expected J / J* (or expected
// inadmissibility), tagged with the claim it comes from.  Claims known to
// be internally inconsistent are marked suspect and are only ever
// reported, never hard-asserted.
struct Prediction {
    std::string claim_id;
    std::optional<int> j;
    std::optional<int> j_star;
    std::optional<bool> admits_j;  // set when the claim speaks to admissibility
    bool suspect = false;
};

// Base families: paths, cycles, completes, stars, null graphs.
std::optional<Prediction> predicted_value(Family family, int n);

// The five derivatives of paths and cycles.
std::optional<Prediction> predicted_derivative(Family family, int n, DerivativeKind kind);

// Corona / join / cartesian given the factor J values.
std::optional<Prediction> predicted_combine(CombineKind kind, std::optional<int> j_g,
                                            std::optional<int> j_h, bool g_is_k1);

}  // namespace jc
