#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kneser/hypergraph.hpp"

namespace kneser {

// Element of (Z_r u {0})^n. Entry -1 encodes the zero element, exponent j in
// [0, r-1] encodes w^j.
struct SignedVector {
    int r = 2;
    std::vector<int8_t> entries;

    int size() const { return (int)entries.size(); }
    int nonzero_count() const;
    std::vector<int> supp(int j) const;       // 1-based vertex indices with entry w^j
    bool contained_in(const SignedVector& other) const;  // x subseteq x'
    SignedVector rotated() const;             // w . x
};

struct Permutation {
    std::vector<int> image;  // image[i-1] = pi(i), a bijection of [n]

    static Permutation identity(int n);
    bool valid() const;
};

struct AltCaps {
    int max_n_per_perm = 10;  // max_alt_for_perm enumerates within (r+1)^n
    int max_n_exact = 8;      // alternation_number enumerates n! permutations
};

// cd_r(H): fewest vertices whose removal leaves an r-colorable induced
// subhypergraph. Ascending removal size, lexicographic subsets.
int colorability_defect(const Hypergraph& h, int r);

// max(0, n - r(k-1)): the closed form for the complete k-subset hypergraph.
int usual_defect_formula(int n, int k, int r);

// Greedy maximum alternating-subsequence length of the nonzero entries of x
// read in pi order; 0 on the all-zero vector.
int alt_under_perm(const SignedVector& x, const Permutation& pi);

// max alt_pi(x) over x whose class supports are all edge-free. If threshold
// is set, returns early with a value >= threshold once one is found.
int max_alt_for_perm(const Hypergraph& h, int r, const Permutation& pi,
                     const AltCaps& caps = {}, std::optional<int> threshold = {});

// alt_r(H): min over all permutations. Single permutation suffices when the
// full-symmetry construction flag is set.
int alternation_number(const Hypergraph& h, int r, const AltCaps& caps = {});

// Same, also reporting a permutation attaining the minimum.
struct AltResult {
    int value;
    Permutation pi;
};
AltResult alternation_number_with_perm(const Hypergraph& h, int r, const AltCaps& caps = {});

// salt_2(H): as alt_2 but x only needs one of its two sign supports edge-free.
// fixed = nullopt means exact (minimum over all permutations).
int strong_alt2(const Hypergraph& h, std::optional<Permutation> fixed = {},
                const AltCaps& caps = {});

}  // namespace kneser
