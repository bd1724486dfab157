#include "jc/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace jc {

Graph::Graph(int order) {
    if (order < 0)
        throw error("graph order must be non-negative");
    if (order > max_order)
        throw scale_error("graph order " + std::to_string(order) + " exceeds the structural cap of " + std::to_string(max_order));
    n_ = order;
    adj_.assign(static_cast<std::size_t>(order), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw error("vertex index " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw error("self-loop at vertex " + std::to_string(u) + " rejected");
    if (adjacent(u, v))
        return;  // parallel edges collapse
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    ++p_;
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(p_));
    for (int u = 0; u < n_; ++u) {
        vertex_set higher = adj_[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::without_edges(const std::vector<std::pair<int, int>>& removed) const {
    Graph g = *this;
    for (auto [u, v] : removed) {
        check_vertex(u);
        check_vertex(v);
        if (g.adjacent(u, v)) {
            g.adj_[u] &= ~bit(v);
            g.adj_[v] &= ~bit(u);
            --g.p_;
        }
    }
    return g;
}

Graph Graph::induced(vertex_set keep) const {
    keep &= vertex_mask();
    std::vector<int> label(static_cast<std::size_t>(n_), -1);
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if (keep & bit(v))
            label[v] = m++;
    Graph g(m);
    for (auto [u, v] : edges())
        if (label[u] >= 0 && label[v] >= 0)
            g.add_edge(label[u], label[v]);
    return g;
}

Graph path_graph(int n) {
    if (n < 1)
        throw error("path requires n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw error("cycle requires n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1)
        throw error("complete graph requires n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 1)
        throw error("star requires at least one leaf");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1)
        throw error("complete bipartite graph requires both sides non-empty");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

Graph null_graph(int n) {
    if (n < 0)
        throw error("null graph requires n >= 0");
    return Graph(n);
}

Graph random_tree(int n, std::uint32_t seed) {
    if (n < 1)
        throw error("random tree requires n >= 1");
    std::mt19937 rng(seed);
    Graph g(n);
    for (int i = 1; i < n; ++i)
        g.add_edge(i, static_cast<int>(rng() % static_cast<std::uint32_t>(i)));
    return g;
}

Graph random_graph(int n, double edge_probability, std::uint32_t seed) {
    std::mt19937 rng(seed);
    Graph g(n);
    const auto threshold = static_cast<std::uint32_t>(edge_probability * 4294967296.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold)
                g.add_edge(u, v);
    return g;
}

std::vector<vertex_set> component_masks(const Graph& g) {
    std::vector<vertex_set> comps;
    vertex_set seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (seen & bit(v))
            continue;
        vertex_set comp = bit(v);
        vertex_set frontier = comp;
        while (frontier) {
            vertex_set next = 0;
            vertex_set f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbours(u);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || component_masks(g).size() == 1;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1;
}

namespace {

// BFS distances and parents from a source; -1 marks unreachable.
void bfs(const Graph& g, int source, std::vector<int>& dist, std::vector<int>& parent) {
    dist.assign(static_cast<std::size_t>(g.order()), -1);
    parent.assign(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        vertex_set nb = g.neighbours(u);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
}

int farthest(const std::vector<int>& dist) {
    int best = 0;
    for (int v = 0; v < static_cast<int>(dist.size()); ++v)
        if (dist[v] > dist[best])
            best = v;  // ties keep the smallest index
    return best;
}

}  // namespace

StructureReport structure(const Graph& g) {
    StructureReport r;
    const int n = g.order();
    r.degree_sequence.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        r.degree_sequence.push_back(d);
        if (d == 0)
            r.isolated_vertices.push_back(v);
        else if (d == 1)
            r.pendant_vertices.push_back(v);
        else
            r.internal_vertices.push_back(v);
    }
    std::sort(r.degree_sequence.rbegin(), r.degree_sequence.rend());
    r.min_degree = n == 0 ? 0 : r.degree_sequence.back();
    r.max_degree = n == 0 ? 0 : r.degree_sequence.front();

    for (vertex_set comp : component_masks(g)) {
        std::vector<int> vs;
        while (comp) {
            vs.push_back(std::countr_zero(comp));
            comp &= comp - 1;
        }
        r.components.push_back(std::move(vs));
    }
    r.connected = n <= 1 || r.components.size() == 1;

    // 2-colourability by BFS across every component.
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    r.bipartite = true;
    for (int s = 0; s < n && r.bipartite; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty() && r.bipartite) {
            int u = queue.front();
            queue.pop_front();
            vertex_set nb = g.neighbours(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    r.bipartite = false;
                    break;
                }
            }
        }
    }

    if (r.connected && n >= 1) {
        std::vector<int> dist, parent;
        bfs(g, 0, dist, parent);
        int a = farthest(dist);
        bfs(g, a, dist, parent);
        int b = farthest(dist);
        std::vector<int> path;
        for (int v = b; v >= 0; v = parent[v])
            path.push_back(v);
        std::reverse(path.begin(), path.end());
        r.diameter_path = std::move(path);
    }
    return r;
}

}  // namespace jc
