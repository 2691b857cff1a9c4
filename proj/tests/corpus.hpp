#pragma once

// Seeded random hypergraph corpora shared by the unit and acceptance suites.
// Determinism matters more than distribution quality here: draws use raw
// mt19937 words against fixed thresholds so every platform sees the same
// instances.

#include <random>
#include <vector>

#include "kneser/hypergraph.hpp"

namespace kneser::testutil {

// Every nonempty subset of [n] is an edge independently with probability ~0.3.
inline Hypergraph random_hypergraph(std::mt19937& gen, int n) {
    std::vector<Edge> edges;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (gen() % 1000 >= 300) continue;
        Edge e;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) e.push_back(v);
        edges.push_back(e);
    }
    return Hypergraph(n, edges);
}

inline std::vector<Hypergraph> corpus(uint32_t seed, int count, int max_n) {
    std::mt19937 gen(seed);
    std::vector<Hypergraph> out;
    for (int i = 0; i < count; ++i)
        out.push_back(random_hypergraph(gen, 2 + i % (max_n - 1)));
    return out;
}

}  // namespace kneser::testutil
