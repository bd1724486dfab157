#include "jc/extremal.hpp"

#include <algorithm>
#include <string>

namespace jc {

namespace {

int component_degree_bound(const Graph& g) {
    int bound = g.order();
    for (vertex_set comp : component_masks(g)) {
        int comp_bound = set_size(comp);
        vertex_set c = comp;
        while (c) {
            int v = std::countr_zero(c);
            c &= c - 1;
            comp_bound = std::min(comp_bound, g.degree(v) + 1);
        }
        bound = std::min(bound, comp_bound);
    }
    return bound;
}

bool admits_j_colouring(const Graph& g) {
    if (g.size() == 0)
        return true;  // null-graph convention
    const int bound = component_degree_bound(g);
    for (int k = 1; k <= bound; ++k)
        if (rainbow_feasible(g, k, Mode::all_vertices))
            return true;
    return false;
}

// Visits subsets of {0..p-1} of the given cardinality in lexicographic
// order; returns true when the callback accepts one.
template <typename Accept>
bool for_each_combination(int p, int t, Accept&& accept) {
    std::vector<int> c(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        c[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (accept(c))
            return true;
        int i = t - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == p - t + i)
            --i;
        if (i < 0)
            return false;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<std::pair<int, int>> pick_edges(const std::vector<std::pair<int, int>>& edges,
                                            const std::vector<int>& idx) {
    std::vector<std::pair<int, int>> out;
    out.reserve(idx.size());
    for (int i : idx)
        out.push_back(edges[static_cast<std::size_t>(i)]);
    return out;
}

void check_edge_cap(const Graph& g, int edge_cap) {
    if (g.size() > edge_cap)
        throw scale_error("edge subset search: size " + std::to_string(g.size()) +
                          " exceeds the cap " + std::to_string(edge_cap));
}

}  // namespace

bool j_equals(const Graph& g, int k, RemovalSemantics semantics) {
    if (k < 1)
        throw error("target J must be at least 1");
    if (semantics == RemovalSemantics::connected_for_k_ge_2 && k >= 2 && !is_connected(g))
        return false;
    if (k == 1)
        return g.size() == 0;  // J = 1 exactly for edgeless graphs
    const int bound = component_degree_bound(g);
    if (k > bound || !rainbow_feasible(g, k, Mode::all_vertices))
        return false;
    for (int above = k + 1; above <= bound; ++above)
        if (rainbow_feasible(g, above, Mode::all_vertices))
            return false;
    return true;
}

std::optional<ExtremalResult> min_removal_to_j(const Graph& g, int k, RemovalSemantics semantics,
                                               int edge_cap) {
    check_edge_cap(g, edge_cap);
    const auto edges = g.edges();
    const int p = static_cast<int>(edges.size());
    for (int t = 0; t <= p; ++t) {
        ExtremalResult result;
        bool found = for_each_combination(p, t, [&](const std::vector<int>& idx) {
            auto removed = pick_edges(edges, idx);
            if (!j_equals(g.without_edges(removed), k, semantics))
                return false;
            result = {t, std::move(removed)};
            return true;
        });
        if (found)
            return result;
    }
    return std::nullopt;
}

namespace {

std::optional<int> admissible_j(const Graph& g) {
    if (g.size() == 0)
        return 1;
    std::optional<int> j;
    const int bound = component_degree_bound(g);
    for (int k = 1; k <= bound; ++k)
        if (rainbow_feasible(g, k, Mode::all_vertices))
            j = k;
    return j;
}

void check_target(const Graph& g, int k, std::optional<int> j) {
    if (!j)
        return;
    if (k < 1 || k > *j)
        throw error("target k = " + std::to_string(k) + " outside 1..J(G) = " + std::to_string(*j));
}

}  // namespace

std::optional<ExtremalResult> r_minus(const Graph& g, int k, RemovalSemantics semantics,
                                      int edge_cap) {
    auto j = admissible_j(g);
    check_target(g, k, j);
    if (!j)
        return std::nullopt;  // bonding variables undefined
    return min_removal_to_j(g, k, semantics, edge_cap);
}

std::optional<ExtremalResult> r_plus(const Graph& g, int k, RemovalSemantics semantics,
                                     int edge_cap) {
    auto j = admissible_j(g);
    check_target(g, k, j);
    if (!j)
        return std::nullopt;
    check_edge_cap(g, edge_cap);
    const auto edges = g.edges();
    const int p = static_cast<int>(edges.size());
    for (int t = p; t >= 0; --t) {
        ExtremalResult result;
        bool found = for_each_combination(p, t, [&](const std::vector<int>& idx) {
            auto removed = pick_edges(edges, idx);
            if (!j_equals(g.without_edges(removed), k, semantics))
                return false;
            result = {t, std::move(removed)};
            return true;
        });
        if (found)
            return result;
    }
    return std::nullopt;
}

BondingProfile bonding_profile(const Graph& g, RemovalSemantics semantics, int edge_cap) {
    BondingProfile profile;
    profile.semantics = semantics;
    auto j = admissible_j(g);
    if (!j)
        return profile;
    Graph stage = g;
    int cumulative = 0;
    for (int k = *j; k >= 1; --k) {
        BondingRow row;
        row.k = k;
        row.minus = r_minus(g, k, semantics, edge_cap);
        row.plus = r_plus(g, k, semantics, edge_cap);
        if (auto step = min_removal_to_j(stage, k, semantics, edge_cap)) {
            row.stage_minus = step->count;
            cumulative += step->count;
            row.cumulative_minus = cumulative;
            stage = stage.without_edges(step->witness);
        }
        profile.rows.push_back(std::move(row));
    }
    return profile;
}

RepairResult minimal_repair(const Graph& g, int edge_cap) {
    if (admits_j_colouring(g))
        return {{}, *admissible_j(g)};
    check_edge_cap(g, edge_cap);
    const auto edges = g.edges();
    const int p = static_cast<int>(edges.size());
    for (int t = 1; t <= p; ++t) {
        RepairResult result;
        bool found = for_each_combination(p, t, [&](const std::vector<int>& idx) {
            auto removed = pick_edges(edges, idx);
            Graph reduced = g.without_edges(removed);
            auto j = admissible_j(reduced);
            if (!j)
                return false;
            result = {std::move(removed), *j};
            return true;
        });
        if (found)
            return result;
    }
    throw error("internal: repair search exhausted all subsets");  // unreachable
}

KnClosedForm kn_bonding_closed_form(int n, int k) {
    if (n < 1)
        throw error("complete graph requires n >= 1");
    if (k < 1 || k > n)
        throw error("target k outside 1..n");
    KnClosedForm result;
    if (k >= (n + 1) / 2)
        result.r_minus = n - k;
    result.r_plus = (n + 1 - k) * (n - k) / 2;
    return result;
}

}  // namespace jc
