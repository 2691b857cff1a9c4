#pragma once

#include <string>
#include <vector>

namespace kneser {

// Vertices are 1-based: a hypergraph on n vertices lives on {1,...,n}.
using Edge = std::vector<int>;  // sorted ascending, no repeats

struct Hypergraph {
    int n = 0;
    std::vector<Edge> edges;  // lex-sorted, duplicate-free

    // Set only by generators whose output provably has the full symmetric
    // group as automorphism group (complete k-subset family). Never inferred.
    bool full_symmetry = false;

    Hypergraph() = default;
    // Canonicalizes: sorts each edge, sorts the edge list, drops duplicate edges.
    // Throws InputError on out-of-range vertices.
    Hypergraph(int n_, std::vector<Edge> raw);

    bool has_edge(const Edge& e) const;  // e must be sorted
    bool has_empty_edge() const;
    bool has_edge_of_size_le1() const;
    std::vector<int> degrees() const;  // edge-incidence count per vertex
};

struct Coloring {
    std::vector<int> color;  // color[v-1] in [1..num_colors]
    int num_colors = 0;
};

struct InducedResult {
    Hypergraph h;
    std::vector<int> to_parent;  // to_parent[i-1] = parent vertex of new vertex i
};

// H[X]: vertex set X re-indexed 1..|X| in ascending order of original labels,
// edges of H entirely contained in X.
InducedResult induced(const Hypergraph& h, const std::vector<int>& x);

// False iff some edge is monochromatic. Edges of size <= 1 (including the
// empty edge) are monochromatic under every coloring.
bool is_proper(const Hypergraph& h, const Coloring& c);

// Same vertex set, inclusion-minimal edges only. Properness-equivalent to h.
Hypergraph minimal_edges(const Hypergraph& h);

// JSON codec: {"n": <int>, "edges": [[...], ...]} with 1-based vertices.
// Parsing rejects out-of-range vertices, repeated vertices within an edge,
// and duplicate edges. Serialization emits edges sorted lexicographically.
std::string to_json_string(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);
void save_hypergraph(const Hypergraph& h, const std::string& path);
Hypergraph load_hypergraph(const std::string& path);

}  // namespace kneser
