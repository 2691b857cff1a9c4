#include "doctest.h"

#include <algorithm>
#include <cstdint>

#include "kneser/errors.hpp"
#include "kneser/generators.hpp"

using namespace kneser;

namespace {

int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Independent count of r-sets of pairwise disjoint k-subsets of [n]:
// ordered choices C(n,k) C(n-k,k) ... C(n-(r-1)k,k), divided by r!.
int64_t disjoint_ksets(int n, int k, int r) {
    int64_t num = 1;
    for (int i = 0; i < r; ++i) num *= binom(n - i * k, k);
    int64_t fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    return num / fact;
}

}  // namespace

TEST_CASE("complete_ksubsets enumerates all k-subsets") {
    Hypergraph h = complete_ksubsets(5, 2);
    CHECK(h.n == 5);
    CHECK((int64_t)h.edges.size() == binom(5, 2));
    CHECK(h.full_symmetry);
    CHECK(complete_ksubsets(4, 4).edges.size() == 1);
    CHECK_THROWS_AS(complete_ksubsets(3, 4), InputError);
    CHECK_THROWS_AS(complete_ksubsets(3, 0), InputError);
}

TEST_CASE("kneser edge counts match the multinomial oracle") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; 2 * k <= n + 1 && k <= 3; ++k)
            for (int r = 2; r <= 4; ++r) {
                auto res = kneser_usual(n, k, r);
                CHECK((int64_t)res.kg.n == binom(n, k));
                CHECK((int64_t)res.kg.edges.size() == disjoint_ksets(n, k, r));
                CHECK(res.kg.edges.empty() == (n < r * k));
            }
}

TEST_CASE("kneser vertex map points back at base edges") {
    Hypergraph base(5, {{1, 2}, {3, 4}, {2, 5}, {1, 3}});
    auto res = kneser::kneser(base, 2);
    CHECK(res.kg.n == 4);
    CHECK(res.base_edges == base.edges);
    // every KG edge is a pair of disjoint base edges
    for (const auto& e : res.kg.edges) {
        REQUIRE(e.size() == 2);
        Edge a = res.base_edges[e[0] - 1], b = res.base_edges[e[1] - 1];
        Edge inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(inter));
        CHECK(inter.empty());
    }
    CHECK_THROWS_AS(kneser::kneser(base, 1), InputError);
    CHECK_THROWS_AS(kneser::kneser(Hypergraph(3, {}), 2), InputError);
}

TEST_CASE("stable_ksubsets excludes cyclically adjacent pairs") {
    // count of 2-stable k-subsets of the n-cycle: n/(n-k) * C(n-k, k)
    for (int n = 4; n <= 9; ++n)
        for (int k = 2; 2 * k <= n; ++k) {
            Hypergraph h = stable_ksubsets(n, k);
            CHECK((int64_t)h.edges.size() == binom(n - k, k) * n / (n - k));
            for (const auto& e : h.edges)
                for (size_t i = 0; i < e.size(); ++i)
                    for (size_t j = i + 1; j < e.size(); ++j) {
                        int d = e[j] - e[i];
                        CHECK(d >= 2);
                        CHECK(d <= n - 2);
                    }
        }
    CHECK(stable_ksubsets(3, 2).edges.empty());  // legal, no error
    CHECK(!stable_ksubsets(5, 2).full_symmetry);
}

TEST_CASE("stable Kneser KG^2(5,2)_2-stab is the 5-cycle") {
    auto res = kneser_stable(5, 2, 2);
    CHECK(res.kg.n == 5);
    CHECK(res.kg.edges.size() == 5);
    auto deg = res.kg.degrees();
    CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }));
}

TEST_CASE("matchings_hypergraph lists r-matchings by edge index") {
    // K4 has 3 perfect matchings.
    Hypergraph k4 = complete_ksubsets(4, 2);
    auto res = matchings_hypergraph(k4, 2);
    CHECK(res.kg.n == 6);
    CHECK(res.kg.edges.size() == 3);
    for (const auto& m : res.kg.edges) {
        REQUIRE(m.size() == 2);
        Edge a = res.base_edges[m[0] - 1], b = res.base_edges[m[1] - 1];
        Edge u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        CHECK(u.size() == 4);
    }
    CHECK_THROWS_AS(matchings_hypergraph(Hypergraph(3, {{1, 2, 3}}), 2), InputError);
}
