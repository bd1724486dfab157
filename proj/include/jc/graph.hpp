#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jc {

// Adjacency rows are single 64-bit words; structural work caps at 64
// vertices, exhaustive solvers refuse well below that.
inline constexpr int max_order = 64;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an input exceeds an exhaustive-search bound.  The CLI maps
// this to its own exit code.
class scale_error : public error {
public:
    using error::error;
};

using vertex_set = std::uint64_t;

inline int set_size(vertex_set s) { return std::popcount(s); }
inline vertex_set bit(int v) { return vertex_set{1} << v; }

class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return p_; }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    vertex_set neighbours(int v) const { return adj_[v]; }
    vertex_set closed_neighbourhood(int v) const { return adj_[v] | bit(v); }
    int degree(int v) const { return std::popcount(adj_[v]); }

    void add_edge(int u, int v);

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    Graph without_edges(const std::vector<std::pair<int, int>>& removed) const;

    // Induced subgraph on the given vertices, relabelled densely in
    // increasing order of original index.
    Graph induced(vertex_set keep) const;

    vertex_set vertex_mask() const {
        return n_ == 64 ? ~vertex_set{0} : (bit(n_) - 1);
    }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int p_ = 0;
    std::vector<vertex_set> adj_;

    void check_vertex(int v) const;
};

// Standard families.  Vertex numbering is canonical: paths and cycles
// consecutive, star centre at index 0, complete bipartite sides contiguous.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite_graph(int a, int b);
Graph null_graph(int n);

// Deterministic for a fixed seed: vertex i (i >= 1) attaches to a
// uniformly drawn earlier vertex.
Graph random_tree(int n, std::uint32_t seed);

// Seeded G(n, p)-style graph used by test corpora and the harness.
Graph random_graph(int n, double edge_probability, std::uint32_t seed);

struct StructureReport {
    std::vector<int> degree_sequence;  // non-increasing
    int min_degree = 0;
    int max_degree = 0;
    bool connected = false;
    bool bipartite = false;
    std::vector<std::vector<int>> components;
    std::vector<int> pendant_vertices;   // degree == 1
    std::vector<int> internal_vertices;  // degree >= 2
    std::vector<int> isolated_vertices;  // degree == 0
    std::vector<int> diameter_path;      // connected graphs only
};

StructureReport structure(const Graph& g);

std::vector<vertex_set> component_masks(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace jc
