#include "doctest.h"

#include <cstdio>

#include "kneser/errors.hpp"
#include "kneser/hypergraph.hpp"

using namespace kneser;

TEST_CASE("construction canonicalizes edges") {
    Hypergraph h(4, {{3, 1}, {2, 4}, {1, 3}, {4}});
    CHECK(h.edges == std::vector<Edge>{{1, 3}, {2, 4}, {4}});
    CHECK(h.has_edge({1, 3}));
    CHECK(!h.has_edge({1, 2}));
    CHECK(!h.has_empty_edge());
    CHECK(h.has_edge_of_size_le1());
    CHECK(h.degrees() == std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("construction rejects out-of-range vertices") {
    CHECK_THROWS_AS(Hypergraph(3, {{1, 4}}), InputError);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 2}}), InputError);
    CHECK_THROWS_AS(Hypergraph(-1, {}), InputError);
}

TEST_CASE("induced subhypergraph relabels and filters") {
    Hypergraph h(5, {{1, 2}, {2, 4}, {4, 5}, {1, 3, 5}});
    auto r = induced(h, {2, 4, 5});
    CHECK(r.h.n == 3);
    CHECK(r.h.edges == std::vector<Edge>{{1, 2}, {2, 3}});  // {2,4}, {4,5}
    CHECK(r.to_parent == std::vector<int>{2, 4, 5});
    CHECK(induced(h, {}).h.n == 0);
}

TEST_CASE("is_proper detects monochromatic edges") {
    Hypergraph h(4, {{1, 2}, {3, 4}});
    CHECK(is_proper(h, {{1, 2, 1, 2}, 2}));
    CHECK(!is_proper(h, {{1, 1, 2, 1}, 2}));
    // size <= 1 edges defeat every coloring
    Hypergraph bad(2, {{1}});
    CHECK(!is_proper(bad, {{1, 2}, 2}));
    Hypergraph empt(2, {{}});
    CHECK(!is_proper(empt, {{1, 2}, 2}));
}

TEST_CASE("minimal_edges drops supersets only") {
    Hypergraph h(4, {{1, 2}, {1, 2, 3}, {2, 3}, {1, 2, 3, 4}, {4}});
    auto m = minimal_edges(h);
    CHECK(m.edges == std::vector<Edge>{{1, 2}, {2, 3}, {4}});
    CHECK(m.n == 4);
}

TEST_CASE("json codec round-trips and validates") {
    Hypergraph h(4, {{1, 3}, {2, 4}, {1, 2, 3}});
    Hypergraph back = hypergraph_from_json(to_json_string(h));
    CHECK(back.n == h.n);
    CHECK(back.edges == h.edges);

    CHECK_THROWS_AS(hypergraph_from_json(R"({"n":2,"edges":[[1,3]]})"), InputError);
    CHECK_THROWS_AS(hypergraph_from_json(R"({"n":3,"edges":[[1,1]]})"), InputError);
    CHECK_THROWS_AS(hypergraph_from_json(R"({"n":3,"edges":[[1,2],[2,1]]})"), InputError);
    CHECK_THROWS_AS(hypergraph_from_json("not json"), InputError);

    const char* path = "codec_roundtrip.json";
    save_hypergraph(h, path);
    Hypergraph loaded = load_hypergraph(path);
    CHECK(loaded.edges == h.edges);
    std::remove(path);
}
