#pragma once

#include <cstdint>
#include <vector>

#include "kneser/hypergraph.hpp"

namespace kneser {

// Categorical product of t hypergraphs, kept implicit: vertices are tuples
// (v_1,...,v_t), a set of tuples is an edge iff each projection is an edge of
// the corresponding factor. Flat indices are 1-based, row-major with the
// first factor most significant.
struct ProductSpace {
    std::vector<Hypergraph> factors;

    explicit ProductSpace(std::vector<Hypergraph> f);

    int64_t vertex_count() const;
    std::vector<int> tuple_of(int64_t flat) const;
    int64_t flat_of(const std::vector<int>& tuple) const;
};

struct ProductCaps {
    int64_t max_vertices = 10'000;      // materialization cap on |V_1 x ... x V_t|
    int64_t max_candidates = 1'000'000; // per-edge-tuple subset enumeration cap
};

// S is a list of tuples. True iff every projection of S is an edge of its factor.
bool product_is_edge(const ProductSpace& p, const std::vector<std::vector<int>>& s);

// Materializes the inclusion-minimal edges of the product on the flat-indexed
// vertex set. Intended for cross-validation and tiny instances; throws
// BudgetExceeded (naming the offending edge tuple) when caps are hit.
Hypergraph product_minimal_edges(const ProductSpace& p, const ProductCaps& caps = {});

// Properness without materialization: c (indexed by flat product vertex) is
// improper iff some color class inside some factor-edge tuple projects onto
// every factor edge.
bool product_is_proper(const ProductSpace& p, const Coloring& c);

}  // namespace kneser
