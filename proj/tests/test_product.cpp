#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "kneser/errors.hpp"
#include "kneser/product.hpp"

using namespace kneser;

namespace {

// Brute-force oracle: every subset of the flat vertex set, edge iff all
// projections are factor edges, then inclusion-minimal filter.
std::vector<std::vector<int64_t>> oracle_minimal_edges(const ProductSpace& p) {
    int64_t nv = p.vertex_count();
    REQUIRE(nv <= 16);
    std::vector<std::vector<int64_t>> edges;
    for (uint32_t mask = 0; mask < (1u << nv); ++mask) {
        std::vector<std::vector<int>> tuples;
        for (int64_t v = 1; v <= nv; ++v)
            if (mask & (1u << (v - 1))) tuples.push_back(p.tuple_of(v));
        bool is_edge = true;
        for (size_t l = 0; l < p.factors.size() && is_edge; ++l) {
            Edge proj;
            for (const auto& t : tuples) proj.push_back(t[l]);
            std::sort(proj.begin(), proj.end());
            proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
            if (!p.factors[l].has_edge(proj)) is_edge = false;
        }
        if (!is_edge) continue;
        std::vector<int64_t> flat;
        for (int64_t v = 1; v <= nv; ++v)
            if (mask & (1u << (v - 1))) flat.push_back(v);
        edges.push_back(flat);
    }
    std::vector<std::vector<int64_t>> min;
    for (const auto& e : edges) {
        bool minimal = true;
        for (const auto& f : edges)
            if (f != e && std::includes(e.begin(), e.end(), f.begin(), f.end()))
                minimal = false;
        if (minimal) min.push_back(e);
    }
    std::sort(min.begin(), min.end());
    return min;
}

}  // namespace

TEST_CASE("flat indexing is a row-major bijection") {
    ProductSpace p({Hypergraph(3, {{1, 2}}), Hypergraph(4, {{1, 2, 3}})});
    CHECK(p.vertex_count() == 12);
    for (int64_t v = 1; v <= 12; ++v) CHECK(p.flat_of(p.tuple_of(v)) == v);
    CHECK(p.tuple_of(1) == std::vector<int>{1, 1});
    CHECK(p.tuple_of(12) == std::vector<int>{3, 4});
}

TEST_CASE("product_is_edge checks all projections") {
    ProductSpace p({Hypergraph(3, {{1, 2}, {2, 3}}), Hypergraph(2, {{1, 2}})});
    CHECK(product_is_edge(p, {{1, 1}, {2, 2}}));
    CHECK(product_is_edge(p, {{1, 1}, {2, 2}, {2, 1}}));  // projections {1,2},{1,2}
    CHECK(!product_is_edge(p, {{1, 1}, {3, 2}}));         // {1,3} not an edge
    CHECK(!product_is_edge(p, {{1, 1}, {2, 1}}));         // second projection {1}
}

TEST_CASE("product_minimal_edges agrees with the subset-enumeration oracle") {
    std::vector<std::vector<Hypergraph>> cases = {
        {Hypergraph(2, {{1, 2}}), Hypergraph(3, {{1, 2}, {2, 3}})},
        {Hypergraph(3, {{1, 2}, {1, 2, 3}}), Hypergraph(2, {{1}, {1, 2}})},
        {Hypergraph(4, {{1, 2, 3}, {2, 4}}), Hypergraph(2, {{1, 2}})},
        {Hypergraph(2, {{}, {1, 2}}), Hypergraph(2, {{1, 2}})},
        {Hypergraph(2, {{1, 2}}), Hypergraph(2, {{1, 2}}), Hypergraph(2, {{1, 2}})},
    };
    for (const auto& factors : cases) {
        ProductSpace p(factors);
        Hypergraph got = product_minimal_edges(p);
        auto want = oracle_minimal_edges(p);
        REQUIRE(got.edges.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i) {
            std::vector<int64_t> e(got.edges[i].begin(), got.edges[i].end());
            CHECK(e == want[i]);
        }
    }
}

TEST_CASE("empty-edge factors make the all-empty tuple an edge") {
    // Both factors have the empty edge, so the empty tuple set is a product
    // edge and no coloring is proper.
    ProductSpace p({Hypergraph(2, {{}, {1, 2}}), Hypergraph(2, {{}})});
    CHECK(!product_is_proper(p, {{1, 2, 1, 2}, 2}));
    Hypergraph m = product_minimal_edges(p);
    REQUIRE(m.edges.size() == 1);
    CHECK(m.edges[0].empty());
}

TEST_CASE("product_is_proper agrees with materialized properness") {
    std::mt19937 gen(7);
    std::vector<std::vector<Hypergraph>> cases = {
        {Hypergraph(3, {{1, 2}, {2, 3}}), Hypergraph(3, {{1, 3}, {1, 2, 3}})},
        {Hypergraph(4, {{1, 2}, {3, 4}, {1, 4}}), Hypergraph(2, {{1, 2}})},
        {Hypergraph(3, {{1}, {2, 3}}), Hypergraph(3, {{1, 2}, {3}})},
    };
    for (const auto& factors : cases) {
        ProductSpace p(factors);
        Hypergraph mat = product_minimal_edges(p);
        for (int trial = 0; trial < 50; ++trial) {
            int k = 2 + (int)(gen() % 3);
            Coloring c;
            c.num_colors = k;
            for (int64_t v = 0; v < p.vertex_count(); ++v)
                c.color.push_back(1 + (int)(gen() % k));
            CHECK(product_is_proper(p, c) == is_proper(mat, c));
        }
    }
}

TEST_CASE("materialization caps throw BudgetExceeded") {
    // 101 x 100 = 10100 flat vertices exceeds the 10^4 vertex cap.
    ProductSpace big({Hypergraph(101, {{1, 2}}), Hypergraph(100, {{1, 2}})});
    CHECK_THROWS_AS(product_minimal_edges(big), BudgetExceeded);

    // 25 flat vertices, but one edge tuple spans a 5x5 cell block: 2^25
    // candidate subsets exceed the per-tuple cap.
    Edge e5{1, 2, 3, 4, 5};
    ProductSpace wide({Hypergraph(5, {e5}), Hypergraph(5, {e5})});
    CHECK_THROWS_AS(product_minimal_edges(wide), BudgetExceeded);
}
