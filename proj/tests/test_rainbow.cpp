#include "doctest.h"

#include <optional>
#include <vector>

#include "jc/coloring.hpp"
#include "jc/graph.hpp"
#include "jc/graph_ops.hpp"
#include "jc/rainbow.hpp"

using namespace jc;

namespace {

// Independent oracle: try all k^n assignments, accept proper surjective
// colourings whose required vertices are all rainbow.
bool brute_feasible(const Graph& g, int k, Mode mode) {
    const int n = g.order();
    if (k > n)
        return false;
    std::vector<int> colour(static_cast<std::size_t>(n), 1);
    while (true) {
        bool ok = true;
        std::vector<int> used(static_cast<std::size_t>(k), 0);
        for (int v = 0; v < n && ok; ++v) {
            ++used[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)] - 1)];
            vertex_set nb = g.neighbours(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (u < v && colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)])
                    ok = false;
            }
        }
        for (int c = 0; c < k && ok; ++c)
            if (used[static_cast<std::size_t>(c)] == 0)
                ok = false;
        if (ok) {
            // Per-component surjectivity, matching the disconnected rule.
            for (vertex_set comp : component_masks(g)) {
                std::uint64_t comp_used = 0;
                vertex_set cm = comp;
                while (cm) {
                    int v = std::countr_zero(cm);
                    cm &= cm - 1;
                    comp_used |= std::uint64_t{1} << (colour[static_cast<std::size_t>(v)] - 1);
                }
                if (std::popcount(comp_used) != k)
                    ok = false;
            }
        }
        for (int v = 0; v < n && ok; ++v) {
            bool required = mode == Mode::all_vertices || g.degree(v) >= 2;
            if (!required)
                continue;
            std::uint64_t seen = 0;
            vertex_set cl = g.closed_neighbourhood(v);
            while (cl) {
                int u = std::countr_zero(cl);
                cl &= cl - 1;
                seen |= std::uint64_t{1} << (colour[static_cast<std::size_t>(u)] - 1);
            }
            if (std::popcount(seen) != k)
                ok = false;
        }
        if (ok)
            return true;
        int i = 0;
        while (i < n && colour[static_cast<std::size_t>(i)] == k)
            colour[static_cast<std::size_t>(i++)] = 1;
        if (i == n)
            return false;
        ++colour[static_cast<std::size_t>(i)];
    }
}

std::optional<int> brute_j(const Graph& g, Mode mode) {
    if (g.size() == 0)
        return 1;
    std::optional<int> j;
    for (int k = 1; k <= g.order(); ++k)
        if (brute_feasible(g, k, mode))
            j = k;
    return j;
}

}  // namespace

TEST_CASE("is_rainbow_vertex") {
    Graph p3 = path_graph(3);
    auto c = Colouring::from_assignment({1, 2, 1});
    CHECK(is_rainbow_vertex(p3, c, 1));

    Graph c5 = cycle_graph(5);
    auto col = Colouring::from_assignment({1, 2, 1, 2, 3});
    CHECK(is_rainbow_vertex(c5, col, 0));  // sees 3 (v4), 1 (self), 2 (v1)
    CHECK_FALSE(is_rainbow_vertex(c5, col, 2));

    auto improper = Colouring::from_assignment({1, 1, 2, 2, 3});
    CHECK_THROWS_AS(is_rainbow_vertex(c5, improper, 0), error);
}

TEST_CASE("find_rainbow_colouring examples") {
    auto c6 = find_rainbow_colouring(cycle_graph(6), 3, Mode::all_vertices);
    REQUIRE(c6.has_value());
    CHECK(c6->colour_of == std::vector<int>{1, 2, 3, 1, 2, 3});

    CHECK_FALSE(find_rainbow_colouring(cycle_graph(5), 3, Mode::all_vertices).has_value());

    auto star = find_rainbow_colouring(star_graph(4), 5, Mode::internal_only);
    REQUIRE(star.has_value());
    CHECK(star->k == 5);
}

TEST_CASE("j_profile named values") {
    auto p4 = j_profile(path_graph(4), Mode::all_vertices);
    CHECK(p4.feasible_k == std::vector<int>{2});
    CHECK(p4.j_value == 2);

    CHECK(j_number(null_graph(5)) == 1);
    CHECK(j_star_number(null_graph(5)) == 1);
    CHECK(j_number(complete_graph(5)) == 5);
    CHECK(j_star_number(path_graph(5)) == 3);
    CHECK(j_number(cycle_graph(4)) == 2);
    CHECK(j_number(cycle_graph(6)) == 3);
    CHECK(j_star_number(cycle_graph(6)) == 3);
    CHECK_FALSE(j_number(cycle_graph(5)).has_value());

    // Stars separate J from J*.
    CHECK(j_number(star_graph(4)) == 2);
    CHECK(j_star_number(star_graph(4)) == 5);

    // Vacuous-constraint case: K2 has no internal vertex.
    CHECK(j_star_number(path_graph(2)) == 2);

    CHECK_THROWS_AS(j_profile(complete_graph(13), Mode::all_vertices), scale_error);
}

TEST_CASE("profile witnesses self-validate") {
    for (const Graph& g : {path_graph(6), cycle_graph(6), complete_graph(5), star_graph(4),
                           random_tree(9, 7), random_graph(8, 0.4, 3)}) {
        for (Mode mode : {Mode::all_vertices, Mode::internal_only}) {
            auto profile = j_profile(g, mode);
            for (auto& [k, witness] : profile.witnesses) {
                CHECK(is_proper(g, witness));
                CHECK(witness.k == k);
                for (int v = 0; v < g.order(); ++v) {
                    bool required = mode == Mode::all_vertices || g.degree(v) >= 2;
                    if (required && g.size() > 0)
                        CHECK(is_rainbow_vertex(g, witness, v));
                }
            }
        }
    }
}

TEST_CASE("pruned solver agrees with the brute-force enumerator") {
    for (std::uint32_t seed = 0; seed < 25; ++seed) {
        Graph g = random_graph(4 + static_cast<int>(seed % 5), 0.45, 1000 + seed);
        for (Mode mode : {Mode::all_vertices, Mode::internal_only}) {
            CHECK(j_profile(g, mode).j_value == brute_j(g, mode));
            for (int k = 1; k <= g.order(); ++k)
                CHECK(rainbow_feasible(g, k, mode) == brute_feasible(g, k, mode));
        }
    }
    // Disconnected semantics: both components must support the same k.
    Graph two = combine(path_graph(3), cycle_graph(6), CombineKind::disjoint_union);
    CHECK(j_profile(two, Mode::all_vertices).j_value == brute_j(two, Mode::all_vertices));
}

TEST_CASE("rainbow neighbourhood numbers") {
    auto p5 = rainbow_neighbourhood_number(path_graph(5));
    CHECK(p5.canonical == 5);
    CHECK(p5.max_over_chi == 5);

    auto c5 = rainbow_neighbourhood_number(cycle_graph(5));
    CHECK(c5.canonical < 5);
    CHECK(c5.max_over_chi < 5);  // no proper 3-colouring makes all five rainbow

    auto k4 = rainbow_neighbourhood_number(complete_graph(4));
    CHECK(k4.canonical == 4);
    CHECK(k4.min_over_chi == 4);
}

TEST_CASE("tree construction") {
    Graph p7 = path_graph(7);
    auto c = tree_jstar_colouring(p7);
    CHECK(c.colour_of == std::vector<int>{1, 3, 2, 1, 3, 2, 1});
    CHECK(is_proper(p7, c));
    for (int v = 1; v <= 5; ++v)
        CHECK(is_rainbow_vertex(p7, c, v));

    Graph s3 = star_graph(3);
    auto sc = tree_jstar_colouring(s3);
    CHECK(is_proper(s3, sc));
    CHECK(sc.k == 3);
    CHECK(is_rainbow_vertex(s3, sc, 0));

    auto p2 = tree_jstar_colouring(path_graph(2));
    CHECK(p2.k == 2);

    CHECK_THROWS_AS(tree_jstar_colouring(cycle_graph(4)), error);

    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        Graph t = random_tree(4 + static_cast<int>(seed % 9), seed);
        auto tc = tree_jstar_colouring(t);
        CHECK(is_proper(t, tc));
        CHECK(tc.k <= 3);
        if (tc.k == 3)
            for (int v = 0; v < t.order(); ++v)
                if (t.degree(v) >= 2)
                    CHECK(is_rainbow_vertex(t, tc, v));
    }
}

TEST_CASE("bound invariants over a corpus") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(5 + static_cast<int>(seed % 5), 0.5, 2000 + seed);
        if (g.order() == 0)
            continue;
        auto j = j_number(g);
        auto js = j_star_number(g);
        auto st = structure(g);
        if (j) {
            CHECK(chromatic_number(g).chi <= *j);
            if (st.connected)
                CHECK(*j <= st.min_degree + 1);
            CHECK(js.has_value());  // admits J => admits J*
            if (st.pendant_vertices.empty() && st.isolated_vertices.empty())
                CHECK(*js == *j);
        }
        if (js) {
            CHECK(*js <= st.max_degree + 1);
            if (j && *js > *j)
                CHECK_FALSE(st.pendant_vertices.empty());
        }
    }
}
