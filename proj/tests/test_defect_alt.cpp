#include "doctest.h"

#include <algorithm>
#include <random>

#include "kneser/defect_alt.hpp"
#include "kneser/errors.hpp"
#include "kneser/generators.hpp"

#include "corpus.hpp"

using namespace kneser;

namespace {

// Direct r-coloring oracle: try all r^n assignments.
bool oracle_r_colorable(const Hypergraph& h, int r) {
    if (h.edges.empty()) return true;
    std::vector<int> c(h.n, 1);
    while (true) {
        bool proper = true;
        for (const auto& e : h.edges) {
            if (e.size() <= 1) { proper = false; break; }
            bool mono = true;
            for (int v : e)
                if (c[v - 1] != c[e[0] - 1]) mono = false;
            if (mono) { proper = false; break; }
        }
        if (proper) return true;
        int i = 0;
        while (i < h.n && c[i] == r) c[i++] = 1;
        if (i == h.n) return false;
        ++c[i];
    }
}

int oracle_defect(const Hypergraph& h, int r) {
    int best = h.n + 1;
    for (unsigned mask = 0; mask < (1u << h.n); ++mask) {
        std::vector<int> keep;
        for (int v = 1; v <= h.n; ++v)
            if (!(mask & (1u << (v - 1)))) keep.push_back(v);
        if (oracle_r_colorable(induced(h, keep).h, r))
            best = std::min(best, (int)std::popcount(mask));
    }
    return best;
}

// Enumerates every vector in (Z_r u {0})^n explicitly, filters admissible ones
// by direct support/edge inspection, and scans alt in pi order. Independent of
// the search's pruning and dominance arguments.
int oracle_max_alt(const Hypergraph& h, int r, const Permutation& pi) {
    int best = 0;
    std::vector<int> x(h.n, -1);
    while (true) {
        bool admissible = true;
        for (int j = 0; j < r && admissible; ++j) {
            std::vector<int> sup;
            for (int v = 1; v <= h.n; ++v)
                if (x[v - 1] == j) sup.push_back(v);
            for (const auto& e : h.edges)
                if (std::includes(sup.begin(), sup.end(), e.begin(), e.end()))
                    admissible = false;
        }
        if (admissible) {
            int count = 0, last = -2;
            for (int i = 0; i < h.n; ++i) {
                int v = x[pi.image[i] - 1];
                if (v >= 0 && v != last) { ++count; last = v; }
            }
            best = std::max(best, count);
        }
        int i = 0;
        while (i < h.n && x[i] == r - 1) x[i++] = -1;
        if (i == h.n) break;
        ++x[i];
    }
    return best;
}

}  // namespace

TEST_CASE("signed vector basics") {
    SignedVector x{3, {0, -1, 2, 0, 1}};
    CHECK(x.nonzero_count() == 4);
    CHECK(x.supp(0) == std::vector<int>{1, 4});
    CHECK(x.supp(2) == std::vector<int>{3});
    SignedVector sub{3, {0, -1, -1, 0, -1}};
    CHECK(sub.contained_in(x));
    CHECK(!x.contained_in(sub));
    SignedVector rot = x.rotated();
    CHECK(rot.entries == std::vector<int8_t>{1, -1, 0, 1, 2});
}

TEST_CASE("alt_under_perm hand cases") {
    Permutation id = Permutation::identity(5);
    CHECK(alt_under_perm({2, {0, 1, 0, -1, 0}}, id) == 3);
    CHECK(alt_under_perm({2, {0, 0, 0, 0, 0}}, id) == 1);
    CHECK(alt_under_perm({2, {-1, -1, -1, -1, -1}}, id) == 0);
    Permutation rev{{5, 4, 3, 2, 1}};
    CHECK(alt_under_perm({2, {0, 1, 1, -1, 0}}, rev) == 3);  // reads 0,1,1,0 -> 0,1,0
}

TEST_CASE("colorability defect matches the closed form on complete families") {
    for (int r = 2; r <= 4; ++r)
        for (int k = 1; k <= 3; ++k)
            for (int n = k; n <= 7; ++n)
                CHECK(colorability_defect(complete_ksubsets(n, k), r) ==
                      usual_defect_formula(n, k, r));
}

TEST_CASE("colorability defect matches the brute-force oracle on random H") {
    for (const auto& h : testutil::corpus(23, 14, 5))
        for (int r = 2; r <= 3; ++r)
            CHECK(colorability_defect(h, r) == oracle_defect(h, r));
}

TEST_CASE("max_alt_for_perm matches the full-enumeration oracle") {
    std::mt19937 gen(5);
    for (const auto& h : testutil::corpus(29, 10, 5)) {
        for (int r = 2; r <= 3; ++r) {
            Permutation id = Permutation::identity(h.n);
            CHECK(max_alt_for_perm(h, r, id) == oracle_max_alt(h, r, id));
            Permutation pi = id;
            std::shuffle(pi.image.begin(), pi.image.end(), gen);
            CHECK(max_alt_for_perm(h, r, pi) == oracle_max_alt(h, r, pi));
        }
    }
}

TEST_CASE("alternation number of complete families hits r(k-1)") {
    // An admissible vector's class supports are edge-free, so each has at most
    // k-1 vertices: alt <= r(k-1), with equality whenever n >= r(k-1).
    for (int r = 2; r <= 3; ++r)
        for (int k = 1; k <= 3; ++k)
            for (int n = std::max(k, r * (k - 1)); n <= 7; ++n)
                CHECK(alternation_number(complete_ksubsets(n, k), r) == r * (k - 1));
}

TEST_CASE("alternation number minimizes over permutations") {
    // Path 1-2-3-4: under the identity the zigzag 0,1,0,1 avoids both edges
    // within each class, but some orderings do better than others; the exact
    // value is the min, cross-checked by brute force over all 4! orders.
    Hypergraph path(4, {{1, 2}, {2, 3}, {3, 4}});
    int best = 1 << 20;
    Permutation pi = Permutation::identity(4);
    do {
        best = std::min(best, oracle_max_alt(path, 2, pi));
    } while (std::next_permutation(pi.image.begin(), pi.image.end()));
    auto res = alternation_number_with_perm(path, 2);
    CHECK(res.value == best);
    CHECK(max_alt_for_perm(path, 2, res.pi) == best);
}

TEST_CASE("n - alt_r dominates cd_r on the shared corpus") {
    for (const auto& h : testutil::corpus(42, 20, 6))
        for (int r = 2; r <= 3; ++r)
            CHECK(h.n - alternation_number(h, r) >= colorability_defect(h, r));
}

TEST_CASE("strong alternation relaxes one side") {
    // One-edge graph on 2 vertices: alt_2 = 1 (the vector (w^0, w^1) puts an
    // edge nowhere but alternates... both classes are singletons, so alt = 2
    // is admissible; with the edge {1,2} split across classes nothing is mono).
    Hypergraph e2(2, {{1, 2}});
    CHECK(alternation_number(e2, 2) == 2);
    CHECK(strong_alt2(e2) == 2);
    // Complete graph K3: alt_2 = 2; salt_2 allows one side to contain an edge,
    // so (w^0, w^0, w^1) with support {1,2} on one side is admissible: salt = 2
    // still (alternation of 0,0,1 is 2), and 0,1,0 has both sides edge-free
    // anyway. salt >= alt always.
    Hypergraph k3 = complete_ksubsets(3, 2);
    CHECK(strong_alt2(k3) >= alternation_number(k3, 2));
    // complete 2-subset families: one side may hold whole edges, so the
    // extremal pattern is +-+ with the light side a single vertex
    CHECK(strong_alt2(complete_ksubsets(4, 2)) == 3);
    CHECK(strong_alt2(complete_ksubsets(5, 2)) == 3);
}

TEST_CASE("per-permutation alternation reference values") {
    CHECK(max_alt_for_perm(complete_ksubsets(5, 2), 2, Permutation::identity(5)) == 2);
    CHECK(max_alt_for_perm(complete_ksubsets(6, 3), 2, Permutation::identity(6)) == 4);
    Hypergraph edgeless(3, {});
    CHECK(max_alt_for_perm(edgeless, 2, Permutation::identity(3)) == 3);
    CHECK(alternation_number(edgeless, 2) == 3);
}

TEST_CASE("caps surface as BudgetExceeded with guidance") {
    Hypergraph big = complete_ksubsets(9, 2);
    big.full_symmetry = false;  // force the permutation sweep
    CHECK_THROWS_AS(alternation_number(big, 2), BudgetExceeded);
    Hypergraph wide(11, {{1, 2}});
    CHECK_THROWS_AS(max_alt_for_perm(wide, 2, Permutation::identity(11)), BudgetExceeded);
}
