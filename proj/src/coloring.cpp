#include "jc/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jc {

Colouring Colouring::from_assignment(std::vector<int> colours) {
    Colouring c;
    c.colour_of = std::move(colours);
    for (int col : c.colour_of) {
        if (col < 1)
            throw error("colour indices start at 1");
        c.k = std::max(c.k, col);
    }
    c.theta.assign(static_cast<std::size_t>(c.k), 0);
    for (int col : c.colour_of)
        ++c.theta[static_cast<std::size_t>(col - 1)];
    for (int i = 0; i < c.k; ++i)
        if (c.theta[static_cast<std::size_t>(i)] == 0)
            throw error("colour " + std::to_string(i + 1) + " is unused");
    return c;
}

bool is_proper(const Graph& g, const Colouring& c) {
    if (c.order() != g.order())
        throw error("colouring domain does not match the graph");
    for (auto [u, v] : g.edges())
        if (c.colour(u) == c.colour(v))
            return false;
    return true;
}

namespace {

// Vertices sorted by degree descending, index ascending.
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

// Greedy colouring in degree order; upper bound witness.
std::vector<int> greedy_colouring(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.order()), 0);
    for (int v : degree_order(g)) {
        std::uint64_t taken = 0;
        vertex_set nb = g.neighbours(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (colour[u] > 0)
                taken |= std::uint64_t{1} << (colour[u] - 1);
        }
        colour[static_cast<std::size_t>(v)] = std::countr_one(taken) + 1;
    }
    return colour;
}

int greedy_clique_bound(const Graph& g) {
    vertex_set cand = g.vertex_mask();
    int size = 0;
    while (cand) {
        int best = -1, best_deg = -1;
        vertex_set c = cand;
        while (c) {
            int v = std::countr_zero(c);
            c &= c - 1;
            int d = set_size(g.neighbours(v) & cand);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        ++size;
        cand &= g.neighbours(best);
    }
    return size;
}

bool colour_backtrack(const Graph& g, const std::vector<int>& order, std::vector<int>& colour,
                      std::size_t pos, int used, int k) {
    if (pos == order.size())
        return true;
    int v = order[pos];
    std::uint64_t taken = 0;
    vertex_set nb = g.neighbours(v);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (colour[u] > 0)
            taken |= std::uint64_t{1} << (colour[u] - 1);
    }
    int limit = std::min(k, used + 1);  // fresh colours are interchangeable
    for (int c = 1; c <= limit; ++c) {
        if ((taken >> (c - 1)) & 1)
            continue;
        colour[static_cast<std::size_t>(v)] = c;
        if (colour_backtrack(g, order, colour, pos + 1, std::max(used, c), k))
            return true;
    }
    colour[static_cast<std::size_t>(v)] = 0;
    return false;
}

}  // namespace

std::optional<Colouring> proper_colouring(const Graph& g, int k) {
    if (g.order() == 0)
        return Colouring{};
    if (k < 1)
        return std::nullopt;
    std::vector<int> colour(static_cast<std::size_t>(g.order()), 0);
    if (!colour_backtrack(g, degree_order(g), colour, 0, 0, k))
        return std::nullopt;
    return Colouring::from_assignment(std::move(colour));
}

ChromaticResult chromatic_number(const Graph& g) {
    if (g.order() == 0)
        return {0, Colouring{}};
    if (g.size() == 0)
        return {1, Colouring::from_assignment(std::vector<int>(static_cast<std::size_t>(g.order()), 1))};
    auto greedy = Colouring::from_assignment(greedy_colouring(g));
    int lb = greedy_clique_bound(g);
    for (int k = lb; k < greedy.k; ++k)
        if (auto c = proper_colouring(g, k))
            return {c->k, std::move(*c)};
    return {greedy.k, std::move(greedy)};
}

namespace {

// All non-empty independent subsets of `allowed`.
void independent_subsets(const Graph& g, vertex_set allowed, vertex_set current,
                         std::vector<vertex_set>& out) {
    if (!allowed) {
        if (current)
            out.push_back(current);
        return;
    }
    int v = std::countr_zero(allowed);
    vertex_set rest = allowed & (allowed - 1);
    independent_subsets(g, rest, current, out);
    independent_subsets(g, rest & ~g.neighbours(v), current | bit(v), out);
}

// Lexicographic order on equal-size vertex sets: the set owning the lowest
// differing vertex index comes first.
bool lex_set_less(vertex_set a, vertex_set b) {
    if (a == b)
        return false;
    return (a >> std::countr_zero(a ^ b)) & 1;
}

bool theta_greater(const std::vector<vertex_set>& a, const std::vector<vertex_set>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (set_size(a[i]) != set_size(b[i]))
            return set_size(a[i]) > set_size(b[i]);
    }
    return false;
}

// Lexicographically theta-maximal partition of `mask` into exactly r
// independent classes; assumes feasibility (chi <= r <= |mask|).
std::vector<vertex_set> best_classes(const Graph& g, vertex_set mask, int r) {
    if (r <= 1)
        return {mask};
    std::vector<vertex_set> cands;
    independent_subsets(g, mask, 0, cands);
    std::sort(cands.begin(), cands.end(), [](vertex_set a, vertex_set b) {
        if (set_size(a) != set_size(b))
            return set_size(a) > set_size(b);
        return lex_set_less(a, b);
    });
    std::vector<vertex_set> best;
    int best_size = -1;
    for (vertex_set cls : cands) {
        if (best_size >= 0 && set_size(cls) < best_size)
            break;  // theta_1 is settled; only same-size candidates can tie
        vertex_set rest = mask & ~cls;
        if (set_size(rest) < r - 1)
            continue;
        if (chromatic_number(g.induced(rest)).chi > r - 1)
            continue;
        std::vector<vertex_set> suffix = best_classes(g, rest, r - 1);
        if (best.empty() || theta_greater(suffix, {best.begin() + 1, best.end()})) {
            best.clear();
            best.push_back(cls);
            best.insert(best.end(), suffix.begin(), suffix.end());
            best_size = set_size(cls);
        }
    }
    if (best.empty())
        throw error("internal: chi_minus recursion found no feasible class");
    return best;
}

}  // namespace

Colouring chi_minus_colouring(const Graph& g) {
    if (g.order() == 0)
        throw error("chi_minus_colouring requires a non-empty graph");
    int chi = chromatic_number(g).chi;
    auto classes = best_classes(g, g.vertex_mask(), chi);
    std::vector<int> colour(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        vertex_set cls = classes[i];
        while (cls) {
            int v = std::countr_zero(cls);
            cls &= cls - 1;
            colour[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
        }
    }
    return Colouring::from_assignment(std::move(colour));
}

Colouring invert_colouring(const Colouring& c) {
    std::vector<int> colour = c.colour_of;
    for (int& col : colour)
        col = c.k - (col - 1);
    return Colouring::from_assignment(std::move(colour));
}

ColourStats colour_stats(const Colouring& c) {
    ColourStats s;
    s.theta = c.theta;
    s.iota = c.colour_of;
    s.iota_prime.reserve(s.iota.size());
    for (int col : s.iota)
        s.iota_prime.push_back(c.k - (col - 1));
    return s;
}

std::string serialize_colouring(const Colouring& c) {
    std::ostringstream out;
    out << c.k << '\n';
    for (int v = 0; v < c.order(); ++v)
        out << v << ' ' << c.colour(v) << '\n';
    return out.str();
}

}  // namespace jc
