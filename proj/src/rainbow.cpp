#include "jc/rainbow.hpp"

#include <algorithm>
#include <deque>

namespace jc {

bool is_rainbow_vertex(const Graph& g, const Colouring& c, int v) {
    if (!is_proper(g, c))
        throw error("is_rainbow_vertex requires a proper colouring");
    std::uint64_t seen = 0;
    vertex_set nb = g.closed_neighbourhood(v);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        seen |= std::uint64_t{1} << (c.colour(u) - 1);
    }
    return std::popcount(seen) == c.k;
}

namespace {

// Backtracking over vertex assignments in index order, colours tried in
// increasing order with the fresh-colour symmetry break, so the first
// complete assignment is the lexicographically least witness.  Pruning:
// properness, per-vertex rainbow potential |seen| + |unassigned| >= k on
// closed neighbourhoods, and surjectivity.
class RainbowSolver {
public:
    RainbowSolver(const Graph& g, int k, Mode mode) : g_(g), n_(g.order()), k_(k) {
        closed_.reserve(static_cast<std::size_t>(n_));
        unassigned_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            closed_.push_back(g.closed_neighbourhood(v));
            unassigned_.push_back(set_size(closed_.back()));
            bool req = mode == Mode::all_vertices || g.degree(v) >= 2;
            if (req)
                required_ |= bit(v);
        }
        colour_.assign(static_cast<std::size_t>(n_), 0);
        seen_.assign(static_cast<std::size_t>(n_), 0);
    }

    std::optional<std::vector<int>> solve() {
        if (k_ < 1 || k_ > n_)
            return std::nullopt;
        if (search(0, 0))
            return colour_;
        return std::nullopt;
    }

private:
    const Graph& g_;
    int n_;
    int k_;
    vertex_set required_ = 0;
    std::vector<vertex_set> closed_;
    std::vector<int> colour_;
    std::vector<std::uint64_t> seen_;
    std::vector<int> unassigned_;

    bool search(int v, int used) {
        if (v == n_)
            return used == k_;
        std::uint64_t forbidden = 0;
        vertex_set nb = g_.neighbours(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (colour_[static_cast<std::size_t>(u)] > 0)
                forbidden |= std::uint64_t{1} << (colour_[static_cast<std::size_t>(u)] - 1);
        }
        const int limit = std::min(k_, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if ((forbidden >> (c - 1)) & 1)
                continue;
            const int new_used = std::max(used, c);
            if (k_ - new_used > n_ - v - 1)
                continue;  // not enough vertices left to use every colour
            const std::uint64_t cbit = std::uint64_t{1} << (c - 1);
            std::uint64_t toggled = 0;  // vertices whose seen set gained colour c
            bool ok = true;
            vertex_set cl = closed_[static_cast<std::size_t>(v)];
            while (cl) {
                int w = std::countr_zero(cl);
                cl &= cl - 1;
                --unassigned_[static_cast<std::size_t>(w)];
                if (!(seen_[static_cast<std::size_t>(w)] & cbit)) {
                    seen_[static_cast<std::size_t>(w)] |= cbit;
                    toggled |= bit(w);
                }
                if ((required_ >> w) & 1) {
                    if (std::popcount(seen_[static_cast<std::size_t>(w)]) +
                            unassigned_[static_cast<std::size_t>(w)] < k_)
                        ok = false;
                }
            }
            if (ok) {
                colour_[static_cast<std::size_t>(v)] = c;
                if (search(v + 1, new_used))
                    return true;
                colour_[static_cast<std::size_t>(v)] = 0;
            }
            cl = closed_[static_cast<std::size_t>(v)];
            while (cl) {
                int w = std::countr_zero(cl);
                cl &= cl - 1;
                ++unassigned_[static_cast<std::size_t>(w)];
            }
            while (toggled) {
                int w = std::countr_zero(toggled);
                toggled &= toggled - 1;
                seen_[static_cast<std::size_t>(w)] &= ~cbit;
            }
        }
        return false;
    }
};

std::optional<std::vector<int>> solve_component(const Graph& comp, int k, Mode mode) {
    return RainbowSolver(comp, k, mode).solve();
}

int degree_bound(const Graph& g, vertex_set comp, Mode mode) {
    int bound = max_order + 1;
    bool any_internal = false;
    int comp_order = set_size(comp);
    vertex_set c = comp;
    while (c) {
        int v = std::countr_zero(c);
        c &= c - 1;
        int d = g.degree(v);
        if (mode == Mode::all_vertices) {
            bound = std::min(bound, d + 1);
        } else if (d >= 2) {
            any_internal = true;
            bound = std::min(bound, d + 1);
        }
    }
    if (mode == Mode::internal_only && !any_internal)
        bound = comp_order;
    return std::min(bound, comp_order);
}

}  // namespace

bool rainbow_feasible(const Graph& g, int k, Mode mode) {
    if (k < 1)
        throw error("colour count must be at least 1");
    if (k > g.order())
        return false;
    if (g.size() == 0)
        return k == 1;
    for (vertex_set comp : component_masks(g)) {
        if (k > degree_bound(g, comp, mode))
            return false;
        if (!solve_component(g.induced(comp), k, mode))
            return false;
    }
    return true;
}

std::optional<Colouring> find_rainbow_colouring(const Graph& g, int k, Mode mode) {
    if (k < 1)
        throw error("colour count must be at least 1");
    if (k > g.order())
        return std::nullopt;
    std::vector<int> colour(static_cast<std::size_t>(g.order()), 0);
    for (vertex_set comp : component_masks(g)) {
        auto sub = solve_component(g.induced(comp), k, mode);
        if (!sub)
            return std::nullopt;
        int i = 0;
        vertex_set c = comp;
        while (c) {
            int v = std::countr_zero(c);
            c &= c - 1;
            colour[static_cast<std::size_t>(v)] = (*sub)[static_cast<std::size_t>(i++)];
        }
    }
    return Colouring::from_assignment(std::move(colour));
}

JProfile j_profile(const Graph& g, Mode mode, int cap) {
    if (g.order() == 0)
        throw error("j_profile requires a non-empty graph");
    if (g.order() > cap)
        throw scale_error("j_profile: order " + std::to_string(g.order()) +
                          " exceeds the sweep cap " + std::to_string(cap));
    JProfile profile;
    profile.mode = mode;
    if (g.size() == 0) {
        // Null-graph convention: J = J* = 1.
        profile.feasible_k = {1};
        profile.witnesses.emplace(1, Colouring::from_assignment(
                                         std::vector<int>(static_cast<std::size_t>(g.order()), 1)));
        profile.j_value = 1;
        return profile;
    }
    int bound = g.order();
    for (vertex_set comp : component_masks(g))
        bound = std::min(bound, degree_bound(g, comp, mode));
    for (int k = 1; k <= bound; ++k) {
        if (auto witness = find_rainbow_colouring(g, k, mode)) {
            profile.feasible_k.push_back(k);
            profile.witnesses.emplace(k, std::move(*witness));
        }
    }
    if (!profile.feasible_k.empty())
        profile.j_value = profile.feasible_k.back();
    return profile;
}

std::optional<int> j_number(const Graph& g, int cap) {
    return j_profile(g, Mode::all_vertices, cap).j_value;
}

std::optional<int> j_star_number(const Graph& g, int cap) {
    return j_profile(g, Mode::internal_only, cap).j_value;
}

namespace {

void sweep_colourings(const Graph& g, int chi, std::vector<int>& colour, int v, int used,
                      int& min_count, int& max_count, bool& any) {
    const int n = g.order();
    if (v == n) {
        if (used != chi)
            return;
        int count = 0;
        for (int w = 0; w < n; ++w) {
            std::uint64_t seen = 0;
            vertex_set cl = g.closed_neighbourhood(w);
            while (cl) {
                int u = std::countr_zero(cl);
                cl &= cl - 1;
                seen |= std::uint64_t{1} << (colour[static_cast<std::size_t>(u)] - 1);
            }
            if (std::popcount(seen) == chi)
                ++count;
        }
        if (!any) {
            min_count = max_count = count;
            any = true;
        } else {
            min_count = std::min(min_count, count);
            max_count = std::max(max_count, count);
        }
        return;
    }
    std::uint64_t forbidden = 0;
    vertex_set nb = g.neighbours(v);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (u < v)
            forbidden |= std::uint64_t{1} << (colour[static_cast<std::size_t>(u)] - 1);
    }
    int limit = std::min(chi, used + 1);
    for (int c = 1; c <= limit; ++c) {
        if ((forbidden >> (c - 1)) & 1)
            continue;
        if (chi - std::max(used, c) > n - v - 1)
            continue;
        colour[static_cast<std::size_t>(v)] = c;
        sweep_colourings(g, chi, colour, v + 1, std::max(used, c), min_count, max_count, any);
    }
    colour[static_cast<std::size_t>(v)] = 0;
}

}  // namespace

RainbowCount rainbow_neighbourhood_number(const Graph& g, int cap) {
    if (g.order() == 0)
        throw error("rainbow_neighbourhood_number requires a non-empty graph");
    if (g.order() > cap)
        throw scale_error("rainbow_neighbourhood_number: order exceeds the sweep cap");
    RainbowCount r;
    const Colouring canonical = chi_minus_colouring(g);
    for (int v = 0; v < g.order(); ++v) {
        if (is_rainbow_vertex(g, canonical, v)) {
            ++r.canonical;
            r.canonical_vertices.push_back(v);
        }
    }
    const int chi = canonical.k;
    std::vector<int> colour(static_cast<std::size_t>(g.order()), 0);
    bool any = false;
    sweep_colourings(g, chi, colour, 0, 0, r.min_over_chi, r.max_over_chi, any);
    return r;
}

Colouring tree_jstar_colouring(const Graph& tree) {
    if (!is_tree(tree))
        throw error("tree_jstar_colouring requires a tree");
    if (tree.order() < 2)
        throw error("tree_jstar_colouring requires order >= 2");
    const StructureReport report = structure(tree);
    std::vector<int> colour(static_cast<std::size_t>(tree.order()), 0);
    std::deque<int> queue;
    for (std::size_t i = 0; i < report.diameter_path.size(); ++i) {
        int v = report.diameter_path[i];
        colour[static_cast<std::size_t>(v)] = static_cast<int>(i % 3) + 1;
        queue.push_back(v);
    }
    // Branches continue the cyclic sequence from their attachment vertex.
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        vertex_set nb = tree.neighbours(u);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (colour[static_cast<std::size_t>(v)] == 0) {
                colour[static_cast<std::size_t>(v)] = colour[static_cast<std::size_t>(u)] % 3 + 1;
                queue.push_back(v);
            }
        }
    }
    return Colouring::from_assignment(std::move(colour));
}

}  // namespace jc
