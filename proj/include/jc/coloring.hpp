#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jc/graph.hpp"

namespace jc {

// Total assignment of colours 1..k with every colour used at least once.
// The empty colouring (k = 0) stands for the order-0 graph.
struct Colouring {
    std::vector<int> colour_of;  // vertex index -> colour in 1..k
    int k = 0;
    std::vector<int> theta;      // theta[i] = |class i+1|

    static Colouring from_assignment(std::vector<int> colours);

    int colour(int v) const { return colour_of[static_cast<std::size_t>(v)]; }
    int order() const { return static_cast<int>(colour_of.size()); }
};

bool is_proper(const Graph& g, const Colouring& c);

struct ChromaticResult {
    int chi = 0;
    Colouring witness;
};

// Exact chromatic number: greedy upper bound, greedy clique lower bound,
// then k-colourability backtracking for each k in between.
ChromaticResult chromatic_number(const Graph& g);

// Decision form used internally and by tests.
std::optional<Colouring> proper_colouring(const Graph& g, int k);

// Canonical chi^- colouring: among proper chi(G)-colourings the one whose
// class-size vector is lexicographically maximum, ties broken by the
// lexicographically smallest class-1 vertex set, recursively.
Colouring chi_minus_colouring(const Graph& g);

// Colour j -> k - (j - 1); an involution reversing theta.
Colouring invert_colouring(const Colouring& c);

struct ColourStats {
    std::vector<int> theta;
    std::vector<int> iota;        // iota(v) = colour index of v
    std::vector<int> iota_prime;  // k - (iota(v) - 1)
};

ColourStats colour_stats(const Colouring& c);

// "k" header then one "v colour" line per vertex.
std::string serialize_colouring(const Colouring& c);

}  // namespace jc
