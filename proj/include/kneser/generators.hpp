#pragma once

#include "kneser/hypergraph.hpp"

namespace kneser {

// Vertex i of a Kneser-type result corresponds to base_edges[i-1]; the base
// edge order is the stored (lex) order of the source hypergraph, so re-runs
// are bit-identical.
struct KneserResult {
    Hypergraph kg;
    std::vector<Edge> base_edges;  // index map: kg vertex -> base edge
};

// ([n], all k-subsets). Carries the full-symmetry flag.
Hypergraph complete_ksubsets(int n, int k);

// KG^r(H): vertices are the edges of H, edges are r-sets of pairwise disjoint
// H-edges. Requires r >= 2 and at least one edge in H.
KneserResult kneser(const Hypergraph& h, int r);

// All 2-stable k-subsets of [n]: no two chosen elements cyclically adjacent.
// Empty edge list when none exist (e.g. n < 2k); not an error.
Hypergraph stable_ksubsets(int n, int k);

// Vertices are the edges of the simple graph G, edges are the r-matchings of
// G encoded by their edge-index sets. kneser(result, 2) is KG(G, rK_2).
KneserResult matchings_hypergraph(const Hypergraph& g, int r);

// KG^r(n,k) and KG^r(n,k)_{2-stab} conveniences.
KneserResult kneser_usual(int n, int k, int r);
KneserResult kneser_stable(int n, int k, int r);

}  // namespace kneser
