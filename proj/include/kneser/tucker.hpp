#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kneser/defect_alt.hpp"
#include "kneser/hypergraph.hpp"

namespace kneser {

enum class Variant { Defect, Alternation };

// (s(x), v(x)) with s an exponent in [0, p-1] encoding w^s and v in [1, m].
struct Label {
    int s = 0;
    int v = 0;
    bool operator==(const Label&) const = default;
};

// Equivariant sign of a tuple of subsets of Z_p, realized by orbit
// canonicalization: the lex-least orbit element (subsets as ascending
// exponent lists) is canonical, and the returned exponent i satisfies
// w^i . canonical = B. Requires p prime and at least one B_l not in
// {empty, Z_p}.
int sign_eps(int p, const std::vector<std::vector<int>>& b);

// Proper coloring of KG^p(H_1) x ... x KG^p(H_t): a total map from edge-index
// tuples (row-major flat layout, 0-based indices per factor) to [C].
struct ProductColoring {
    std::vector<int> dims;   // |E_l| per factor
    std::vector<int> color;  // flat, row-major, values in [1..C]
    int C = 0;

    int64_t flat_of(const std::vector<int>& edge_idx) const;
    int at(const std::vector<int>& edge_idx) const { return color[flat_of(edge_idx)]; }
};

// Total order on edge tuples: color ascending, then lexicographic on the
// edge-index tuples. Returns <0, 0, >0.
int tuple_order_cmp(const ProductColoring& c, const std::vector<int>& s,
                    const std::vector<int>& t);

struct LambdaContext {
    std::vector<Hypergraph> factors;
    int p = 2;
    ProductColoring coloring;
    Variant variant = Variant::Defect;
    std::vector<Permutation> perms;  // alternation variant; identity if empty
};

// A Z_p-Tucker instance: the lambda map is an oracle, evaluated on demand.
struct TuckerInstance {
    int p = 2;
    int n = 0;
    int m = 0;
    int alpha = 0;
    std::function<Label(const SignedVector&)> lambda;
};

// Builds the equivariant lambda map induced by the coloring for the context.
// Validates: p prime, no empty factor edges, proper coloring, factor 1
// attaining the minimum of the relevant per-factor quantity.
TuckerInstance build_lambda(const LambdaContext& ctx);

struct CheckMode {
    bool exhaustive = true;
    uint64_t seed = 0;        // sampled mode only
    int64_t count = 0;        // sampled mode: chains drawn per property
    int64_t budget = 10'000'000;  // exhaustive mode: max enumerated patterns per check
};

struct TuckerReport {
    bool equivariance_ok = true;
    bool property1_ok = true;
    bool property2_ok = true;
    // Violation witnesses: each is a chain of vectors, stored entrywise with
    // 0 for the zero element and j+1 for w^j.
    std::vector<std::vector<std::vector<int>>> equivariance_violations;
    std::vector<std::vector<std::vector<int>>> property1_violations;
    std::vector<std::vector<std::vector<int>>> property2_violations;
    bool conclusion_holds = false;  // alpha + (m-alpha)(p-1) >= n
    int p = 0, n = 0, m = 0, alpha = 0;
    bool exhaustive = true;
    uint64_t seed = 0;
    int64_t count = 0;

    bool all_ok() const { return equivariance_ok && property1_ok && property2_ok; }
    std::string to_json_string() const;
};

TuckerReport check_tucker(const TuckerInstance& inst, const CheckMode& mode = {});

struct TransformCaps {
    int max_n = 12;  // 2^n subset enumeration
    AltCaps alt;     // alternation variant inner computations
};

// T_{H,C,s} (defect) or T~_{H,C,s} (alternation): same vertex set, edges are
// the subsets A with cd_s(H[A]) > (s-1)C, resp. |A| - alt_s(H[A]) > (s-1)C.
// Not reduced to minimal edges.
Hypergraph transform_T(const Hypergraph& h, int C, int s, Variant variant,
                       const TransformCaps& caps = {});

struct ReductionReport {
    bool holds = false;
    int lhs = 0;  // cd_{rs}(H) resp. alt_r(T~)
    int rhs = 0;  // r(s-1)C + cd_r(T) resp. r(s-1)C + alt_{rs}(H)
};

ReductionReport verify_reduction(const Hypergraph& h, int r, int s, int C,
                                 Variant variant, const TransformCaps& caps = {});

}  // namespace kneser
