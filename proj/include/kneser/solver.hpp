#pragma once

#include <optional>

#include "kneser/product.hpp"

namespace kneser {

struct SearchStats {
    long long nodes = 0;
    bool complete = false;  // the search ran to exhaustion (or found a witness)
};

struct ChromaticResult {
    // nullopt = UNCOLORABLE (an edge of size <= 1 exists). chi = 0 for the
    // empty vertex set, 1 for edgeless nonempty targets.
    std::optional<int> chi;
    std::optional<Coloring> witness;     // proper coloring with chi colors
    SearchStats refutation;              // exhaustive refutation of chi-1 colors
};

// Returns a proper coloring with <= k colors, or nullopt after complete
// search. Deterministic: same answer regardless of environment.
std::optional<Coloring> is_k_colorable(const Hypergraph& h, int k,
                                       SearchStats* stats = nullptr);
std::optional<Coloring> is_k_colorable(const ProductSpace& p, int k,
                                       SearchStats* stats = nullptr);

ChromaticResult chromatic_number(const Hypergraph& h);
ChromaticResult chromatic_number(const ProductSpace& p);

// ceil((n - r(k-1)) / (r-1)); asserted only under r >= 2, k >= 1, n >= rk.
int afl_formula(int n, int k, int r);

}  // namespace kneser
