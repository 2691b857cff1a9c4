#include "kneser/tucker.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <random>

#include "json.hpp"
#include "kneser/errors.hpp"
#include "kneser/generators.hpp"
#include "kneser/product.hpp"
#include "kneser/solver.hpp"

namespace kneser {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

int sign_eps(int p, const std::vector<std::vector<int>>& b) {
    if (!is_prime(p)) throw InputError("sign_eps: p must be prime");
    if (b.empty()) throw InputError("sign_eps: empty tuple");
    bool admissible = false;
    for (const auto& set : b) {
        for (size_t i = 0; i < set.size(); ++i) {
            if (set[i] < 0 || set[i] >= p) throw InputError("sign_eps: exponent out of range");
            if (i && set[i] <= set[i - 1]) throw InputError("sign_eps: sets must be strictly ascending");
        }
        if (!set.empty() && (int)set.size() != p) admissible = true;
    }
    if (!admissible)
        throw InputError("sign_eps: every B_l is empty or all of Z_p");

    auto rotate = [&](const std::vector<std::vector<int>>& t, int i) {
        std::vector<std::vector<int>> out(t.size());
        for (size_t l = 0; l < t.size(); ++l) {
            for (int e : t[l]) out[l].push_back((e + i) % p);
            std::sort(out[l].begin(), out[l].end());
        }
        return out;
    };

    int i0 = 0;
    auto best = b;
    for (int i = 1; i < p; ++i) {
        auto cand = rotate(b, i);
        if (cand < best) {
            best = cand;
            i0 = i;
        }
    }
    // best = w^{i0} . b, so b = w^{(p - i0) mod p} . canonical
    return (p - i0) % p;
}

int64_t ProductColoring::flat_of(const std::vector<int>& edge_idx) const {
    if (edge_idx.size() != dims.size()) throw InputError("edge tuple arity mismatch");
    int64_t f = 0;
    for (size_t l = 0; l < dims.size(); ++l) {
        if (edge_idx[l] < 0 || edge_idx[l] >= dims[l])
            throw InputError("edge index out of range");
        f = f * dims[l] + edge_idx[l];
    }
    return f;
}

int tuple_order_cmp(const ProductColoring& c, const std::vector<int>& s,
                    const std::vector<int>& t) {
    int cs = c.at(s), ct = c.at(t);
    if (cs != ct) return cs < ct ? -1 : 1;
    if (s < t) return -1;
    if (t < s) return 1;
    return 0;
}

// ---------------------------------------------------------------------------
// The lambda construction (defect variant and alternation variant).
// ---------------------------------------------------------------------------

namespace {

struct FactorInfo {
    bool computed = false;
    uint32_t a_mask = 0;   // classes j whose supp_j(y) contains an edge
    int nnz = 0;           // |y|
    int alt_val = 0;       // alt_pi(y), alternation variant only
    int inner_max = 0;     // variant-specific inner maximum
};

class LambdaMap {
  public:
    explicit LambdaMap(LambdaContext ctx) : ctx_(std::move(ctx)) {
        if (!is_prime(ctx_.p)) throw InputError("build_lambda: p must be prime");
        p_ = ctx_.p;
        t_ = (int)ctx_.factors.size();
        if (t_ == 0) throw InputError("build_lambda: no factors");
        n_ = 0;
        for (const auto& h : ctx_.factors) {
            if (h.has_empty_edge())
                throw InputError("build_lambda: a factor has the empty set as an edge");
            if (h.edges.empty())
                throw InputError("build_lambda: a factor has no edges");
            offsets_.push_back(n_);
            n_ += h.n;
        }
        if (ctx_.perms.empty()) {
            for (const auto& h : ctx_.factors)
                ctx_.perms.push_back(Permutation::identity(h.n));
        }
        if ((int)ctx_.perms.size() != t_)
            throw InputError("build_lambda: one permutation per factor required");
        for (int l = 0; l < t_; ++l)
            if ((int)ctx_.perms[l].image.size() != ctx_.factors[l].n || !ctx_.perms[l].valid())
                throw InputError("build_lambda: invalid factor permutation");

        validate_coloring();

        // Factor-1 minimality and alpha.
        std::vector<int> quantity(t_);
        for (int l = 0; l < t_; ++l) {
            if (ctx_.variant == Variant::Defect) {
                quantity[l] = colorability_defect(ctx_.factors[l], p_);
            } else {
                AltCaps caps;
                caps.max_n_per_perm = std::max(caps.max_n_per_perm, ctx_.factors[l].n);
                quantity[l] = ctx_.factors[l].n -
                              max_alt_for_perm(ctx_.factors[l], p_, ctx_.perms[l], caps);
            }
        }
        for (int l = 1; l < t_; ++l)
            if (quantity[l] < quantity[0])
                throw InputError("build_lambda: factor 1 must attain the minimum "
                                 "of the relevant quantity; reorder the factors");
        alpha_ = n_ - quantity[0] + p_ - 1;
        m_ = alpha_ + ctx_.coloring.C - 1;

        for (int l = 0; l < t_; ++l) {
            const auto& h = ctx_.factors[l];
            std::vector<uint32_t> masks;
            for (const auto& e : h.edges) {
                uint32_t m = 0;
                for (int v : e) m |= uint32_t(1) << (v - 1);
                masks.push_back(m);
            }
            edge_masks_.push_back(std::move(masks));
            int64_t codes = 1;
            for (int i = 0; i < h.n; ++i) codes *= (p_ + 1);
            info_.emplace_back(codes);
            maxfree_.emplace_back(uint64_t(1) << h.n, -1);
        }
    }

    int n() const { return n_; }
    int m() const { return m_; }
    int alpha() const { return alpha_; }
    int p() const { return p_; }

    Label eval(const SignedVector& x) const {
        if (x.r != p_ || x.size() != n_) throw InputError("lambda: vector shape mismatch");
        if (x.nonzero_count() == 0) throw InputError("lambda: undefined on the zero vector");

        std::vector<const FactorInfo*> fi(t_);
        uint32_t full = (uint32_t(1) << p_) - 1;
        bool all_full = true, all_trivial = true;
        for (int l = 0; l < t_; ++l) {
            fi[l] = &factor_info(l, x);
            if (fi[l]->a_mask != full) all_full = false;
            if (fi[l]->a_mask != full && fi[l]->a_mask != 0) all_trivial = false;
        }

        if (!all_full) {  // first case
            int v = 0;
            for (int l = 0; l < t_; ++l) {
                uint32_t a = fi[l]->a_mask;
                if (a == 0) {
                    v += ctx_.variant == Variant::Defect ? fi[l]->nnz : fi[l]->alt_val;
                } else if (a == full) {
                    v += fi[l]->nnz;
                } else {
                    v += std::popcount(a) + fi[l]->inner_max;
                }
            }
            int s;
            if (all_trivial) {
                s = first_nonzero_exponent(x);
            } else {
                std::vector<std::vector<int>> b(t_);
                for (int l = 0; l < t_; ++l)
                    for (int j = 0; j < p_; ++j)
                        if (fi[l]->a_mask >> j & 1) b[l].push_back(j);
                s = sign_eps(p_, b);
            }
            if (v < 1 || v > alpha_)
                throw CriticalFinding("lambda first case: v out of [1, alpha]");
            return Label{s, v};
        }

        // Second case: every supp_j(y_l) contains an edge; pick the order-minimal
        // edge tuple over all classes j.
        std::optional<std::vector<int>> best_tuple;
        int best_j = -1;
        for (int j = 0; j < p_; ++j) {
            std::vector<std::vector<int>> cand(t_);
            for (int l = 0; l < t_; ++l) {
                uint32_t sj = supp_mask(l, x, j);
                for (int ei = 0; ei < (int)edge_masks_[l].size(); ++ei)
                    if ((edge_masks_[l][ei] & sj) == edge_masks_[l][ei])
                        cand[l].push_back(ei);
                if (cand[l].empty())
                    throw CriticalFinding("second case: missing candidate edge");
            }
            std::vector<int> pick(t_, 0);
            while (true) {
                std::vector<int> tup(t_);
                for (int l = 0; l < t_; ++l) tup[l] = cand[l][pick[l]];
                if (!best_tuple || tuple_order_cmp(ctx_.coloring, tup, *best_tuple) < 0) {
                    best_tuple = tup;
                    best_j = j;
                }
                int l = t_ - 1;
                while (l >= 0 && ++pick[l] == (int)cand[l].size()) pick[l--] = 0;
                if (l < 0) break;
            }
        }
        int col = ctx_.coloring.at(*best_tuple);
        if (col == ctx_.coloring.C)
            throw CriticalFinding(
                "second case: order-minimal tuple carries the top color; "
                "contradicts properness of the coloring");
        return Label{best_j, alpha_ + col};
    }

  private:
    void validate_coloring() {
        const auto& c = ctx_.coloring;
        if ((int)c.dims.size() != t_) throw InputError("coloring dims arity mismatch");
        int64_t total = 1;
        for (int l = 0; l < t_; ++l) {
            if (c.dims[l] != (int)ctx_.factors[l].edges.size())
                throw InputError("coloring dims do not match factor edge counts");
            total *= c.dims[l];
        }
        if ((int64_t)c.color.size() != total)
            throw InputError("coloring is not total on the edge-tuple space");
        if (c.C < 1) throw InputError("coloring must use at least one color");
        for (int q : c.color)
            if (q < 1 || q > c.C) throw InputError("coloring value out of [1, C]");

        std::vector<Hypergraph> kgs;
        for (const auto& h : ctx_.factors) kgs.push_back(kneser(h, p_).kg);
        ProductSpace ps(std::move(kgs));
        Coloring flat{std::vector<int>(c.color.begin(), c.color.end()), c.C};
        if (!product_is_proper(ps, flat))
            throw InputError("build_lambda: the coloring is not a proper coloring "
                             "of the product of Kneser hypergraphs");
    }

    int64_t code_of(int l, const SignedVector& x) const {
        int64_t code = 0;
        int nl = ctx_.factors[l].n;
        for (int i = 0; i < nl; ++i)
            code = code * (p_ + 1) + (x.entries[offsets_[l] + i] + 1);
        return code;
    }

    uint32_t supp_mask(int l, const SignedVector& x, int j) const {
        uint32_t m = 0;
        int nl = ctx_.factors[l].n;
        for (int i = 0; i < nl; ++i)
            if (x.entries[offsets_[l] + i] == j) m |= uint32_t(1) << i;
        return m;
    }

    bool contains_edge(int l, uint32_t s) const {
        for (uint32_t em : edge_masks_[l])
            if ((em & s) == em) return true;
        return false;
    }

    // Largest subset of s (as a mask) inducing no edge.
    int maxfree(int l, uint32_t s) const {
        int8_t& memo = maxfree_[l][s];
        if (memo >= 0) return memo;
        int best;
        if (!contains_edge(l, s)) {
            best = std::popcount(s);
        } else {
            best = 0;
            for (int i = 0; i < ctx_.factors[l].n; ++i)
                if (s >> i & 1)
                    best = std::max(best, maxfree(l, s & ~(uint32_t(1) << i)));
        }
        memo = (int8_t)best;
        return best;
    }

    int first_nonzero_exponent(const SignedVector& x) const {
        for (int8_t e : x.entries)
            if (e >= 0) return e;
        throw InputError("zero vector");
    }

    const FactorInfo& factor_info(int l, const SignedVector& x) const {
        int64_t code = code_of(l, x);
        FactorInfo& fi = info_[l][code];
        if (fi.computed) return fi;
        int nl = ctx_.factors[l].n;
        std::vector<uint32_t> supp(p_, 0);
        fi.nnz = 0;
        for (int i = 0; i < nl; ++i) {
            int8_t e = x.entries[offsets_[l] + i];
            if (e >= 0) {
                supp[e] |= uint32_t(1) << i;
                ++fi.nnz;
            }
        }
        fi.a_mask = 0;
        for (int j = 0; j < p_; ++j)
            if (contains_edge(l, supp[j])) fi.a_mask |= uint32_t(1) << j;

        if (ctx_.variant == Variant::Defect) {
            // Classes are independent: the inner maximum splits per class.
            fi.inner_max = 0;
            for (int j = 0; j < p_; ++j) fi.inner_max += maxfree(l, supp[j]);
        } else {
            fi.alt_val = alt_of_slice(l, x);
            fi.inner_max = inner_max_alt(l, x);
        }
        fi.computed = true;
        return fi;
    }

    int alt_of_slice(int l, const SignedVector& x) const {
        const auto& pi = ctx_.perms[l];
        int count = 0, last = -1;
        for (int i = 0; i < ctx_.factors[l].n; ++i) {
            int8_t v = x.entries[offsets_[l] + pi.image[i] - 1];
            if (v >= 0 && v != last) {
                ++count;
                last = v;
            }
        }
        return count;
    }

    // max alt_pi(y~) over sub-vectors y~ of the slice with all class supports
    // edge-free. Brute force over subsets of the nonzero positions.
    int inner_max_alt(int l, const SignedVector& x) const {
        int nl = ctx_.factors[l].n;
        std::vector<int> nz;  // 0-based positions within the slice
        for (int i = 0; i < nl; ++i)
            if (x.entries[offsets_[l] + i] >= 0) nz.push_back(i);
        int best = 0;
        for (uint32_t sub = 0; sub < (uint32_t(1) << nz.size()); ++sub) {
            std::vector<uint32_t> supp(p_, 0);
            std::vector<int8_t> slice(nl, -1);
            for (size_t a = 0; a < nz.size(); ++a) {
                if (!(sub >> a & 1)) continue;
                int i = nz[a];
                int8_t e = x.entries[offsets_[l] + i];
                supp[e] |= uint32_t(1) << i;
                slice[i] = e;
            }
            bool ok = true;
            for (int j = 0; j < p_ && ok; ++j)
                if (contains_edge(l, supp[j])) ok = false;
            if (!ok) continue;
            const auto& pi = ctx_.perms[l];
            int count = 0, last = -1;
            for (int i = 0; i < nl; ++i) {
                int8_t v = slice[pi.image[i] - 1];
                if (v >= 0 && v != last) {
                    ++count;
                    last = v;
                }
            }
            best = std::max(best, count);
        }
        return best;
    }

    LambdaContext ctx_;
    int p_ = 0, t_ = 0, n_ = 0, alpha_ = 0, m_ = 0;
    std::vector<int> offsets_;
    std::vector<std::vector<uint32_t>> edge_masks_;
    mutable std::vector<std::vector<FactorInfo>> info_;
    mutable std::vector<std::vector<int8_t>> maxfree_;
};

}  // namespace

TuckerInstance build_lambda(const LambdaContext& ctx) {
    auto map = std::make_shared<LambdaMap>(ctx);
    TuckerInstance inst;
    inst.p = map->p();
    inst.n = map->n();
    inst.m = map->m();
    inst.alpha = map->alpha();
    inst.lambda = [map](const SignedVector& x) { return map->eval(x); };
    return inst;
}

// ---------------------------------------------------------------------------
// Z_p-Tucker hypothesis checker.
// ---------------------------------------------------------------------------

namespace {

std::vector<int> encode_vec(const SignedVector& x) {
    std::vector<int> out(x.size());
    for (int i = 0; i < x.size(); ++i) out[i] = x.entries[i] + 1;
    return out;
}

constexpr int kMaxStoredViolations = 32;

double pow_d(double base, int exp) {
    double r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Enumerates all chains x^(1) subseteq ... subseteq x^(L) coordinatewise: a
// coordinate either stays zero or takes value s from chain position k on.
template <typename F>
void for_each_chain(int n, int p, int len, F&& leaf) {
    std::vector<SignedVector> chain(len);
    for (auto& x : chain) {
        x.r = p;
        x.entries.assign(n, -1);
    }
    auto rec = [&](auto&& self, int coord) -> void {
        if (coord == n) {
            leaf(chain);
            return;
        }
        self(self, coord + 1);  // stays zero
        for (int k = 0; k < len; ++k) {
            for (int s = 0; s < p; ++s) {
                for (int i = k; i < len; ++i) chain[i].entries[coord] = (int8_t)s;
                self(self, coord + 1);
                for (int i = k; i < len; ++i) chain[i].entries[coord] = -1;
            }
        }
    };
    rec(rec, 0);
}

}  // namespace

TuckerReport check_tucker(const TuckerInstance& inst, const CheckMode& mode) {
    if (!is_prime(inst.p)) throw InputError("check_tucker: p must be prime");
    if (inst.alpha > inst.m || inst.n < 1)
        throw InputError("check_tucker: invalid instance parameters");
    TuckerReport rep;
    rep.p = inst.p;
    rep.n = inst.n;
    rep.m = inst.m;
    rep.alpha = inst.alpha;
    rep.exhaustive = mode.exhaustive;
    rep.seed = mode.seed;
    rep.count = mode.count;
    const int p = inst.p, n = inst.n;

    auto record = [&](std::vector<std::vector<std::vector<int>>>& sink,
                      const std::vector<SignedVector>& chain) {
        if ((int)sink.size() < kMaxStoredViolations) {
            std::vector<std::vector<int>> enc;
            for (const auto& x : chain) enc.push_back(encode_vec(x));
            sink.push_back(std::move(enc));
        }
    };

    auto check_equivariance = [&](const SignedVector& x) {
        Label a = inst.lambda(x);
        Label b = inst.lambda(x.rotated());
        if (b.v != a.v || b.s != (a.s + 1) % p) {
            rep.equivariance_ok = false;
            record(rep.equivariance_violations, {x, x.rotated()});
        }
    };
    auto check_p1 = [&](const std::vector<SignedVector>& chain) {
        if (chain[0].nonzero_count() == 0) return;
        Label a = inst.lambda(chain[0]);
        if (a.v > inst.alpha) return;
        Label b = inst.lambda(chain[1]);
        if (a.v == b.v && a.s != b.s) {
            rep.property1_ok = false;
            record(rep.property1_violations, chain);
        }
    };
    auto check_p2 = [&](const std::vector<SignedVector>& chain) {
        if (chain[0].nonzero_count() == 0) return;
        std::vector<int> ss;
        int v0 = -1;
        for (const auto& x : chain) {
            Label lab = inst.lambda(x);
            if (v0 < 0) {
                v0 = lab.v;
                if (v0 < inst.alpha + 1) return;
            } else if (lab.v != v0) {
                return;
            }
            ss.push_back(lab.s);
        }
        std::sort(ss.begin(), ss.end());
        if (std::unique(ss.begin(), ss.end()) == ss.end()) {  // pairwise distinct
            rep.property2_ok = false;
            record(rep.property2_violations, chain);
        }
    };

    if (mode.exhaustive) {
        if (pow_d(p + 1, n) > (double)mode.budget ||
            pow_d(1 + 2 * p, n) > (double)mode.budget ||
            pow_d(1 + (double)p * p, n) > (double)mode.budget)
            throw BudgetExceeded("check_tucker: exhaustive enumeration exceeds budget; "
                                 "use sampled mode with a seed");
        for_each_chain(n, p, 1, [&](const std::vector<SignedVector>& chain) {
            if (chain[0].nonzero_count() > 0) check_equivariance(chain[0]);
        });
        for_each_chain(n, p, 2, check_p1);
        for_each_chain(n, p, p, check_p2);
    } else {
        std::mt19937_64 rng(mode.seed);
        auto random_chain = [&](int len) {
            std::vector<SignedVector> chain(len);
            for (auto& x : chain) {
                x.r = p;
                x.entries.assign(n, -1);
            }
            for (int coord = 0; coord < n; ++coord) {
                // uniform over the 1 + len*p coordinate patterns
                int64_t pick = (int64_t)(rng() % (uint64_t)(1 + len * p));
                if (pick == 0) continue;
                int k = (int)((pick - 1) / p);
                int s = (int)((pick - 1) % p);
                for (int i = k; i < len; ++i) chain[i].entries[coord] = (int8_t)s;
            }
            return chain;
        };
        for (int64_t it = 0; it < mode.count; ++it) {
            auto c1 = random_chain(1);
            if (c1[0].nonzero_count() > 0) check_equivariance(c1[0]);
            check_p1(random_chain(2));
            check_p2(random_chain(p));
        }
    }

    rep.conclusion_holds = inst.alpha + (int64_t)(inst.m - inst.alpha) * (p - 1) >= n;
    return rep;
}

std::string TuckerReport::to_json_string() const {
    nlohmann::json j;
    j["p"] = p;
    j["n"] = n;
    j["m"] = m;
    j["alpha"] = alpha;
    j["mode"] = exhaustive ? "exhaustive" : "sampled";
    if (!exhaustive) {
        j["seed"] = seed;
        j["count"] = count;
    }
    j["equivariance_ok"] = equivariance_ok;
    j["property1_ok"] = property1_ok;
    j["property2_ok"] = property2_ok;
    j["violations"]["equivariance"] = equivariance_violations;
    j["violations"]["property1"] = property1_violations;
    j["violations"]["property2"] = property2_violations;
    j["conclusion"]["lhs"] = alpha + (int64_t)(m - alpha) * (p - 1);
    j["conclusion"]["rhs"] = n;
    j["conclusion"]["holds"] = conclusion_holds;
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Reduction hypergraphs and the composite-rank inequalities.
// ---------------------------------------------------------------------------

Hypergraph transform_T(const Hypergraph& h, int C, int s, Variant variant,
                       const TransformCaps& caps) {
    if (C < 1) throw InputError("transform_T: C must be >= 1");
    if (s < 2) throw InputError("transform_T: s must be >= 2");
    if (h.n > caps.max_n)
        throw BudgetExceeded("transform_T: n=" + std::to_string(h.n) +
                             " exceeds subset-enumeration cap " +
                             std::to_string(caps.max_n));
    int n = h.n;
    auto verts_of = [&](uint32_t mask) {
        std::vector<int> vs;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) vs.push_back(v);
        return vs;
    };
    const int threshold = (s - 1) * C;
    std::vector<Edge> edges;

    if (variant == Variant::Defect) {
        uint32_t full = (n == 32) ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
        std::vector<int> cd(uint64_t(full) + 1, 0);
        for (uint32_t b = 0; b <= full; ++b) {
            if (is_k_colorable(induced(h, verts_of(b)).h, s)) {
                cd[b] = 0;
            } else {
                int best = n + 1;
                for (int i = 0; i < n; ++i)
                    if (b >> i & 1) best = std::min(best, cd[b & ~(uint32_t(1) << i)]);
                cd[b] = best + 1;
            }
            if (cd[b] > threshold) edges.push_back(verts_of(b));
        }
    } else {
        uint32_t full = (uint32_t(1) << n) - 1;
        for (uint32_t b = 1; b <= full; ++b) {
            auto sub = induced(h, verts_of(b));
            int val = sub.h.n - alternation_number(sub.h, s, caps.alt);
            if (val > threshold) edges.push_back(verts_of(b));
        }
    }
    return Hypergraph(n, std::move(edges));
}

ReductionReport verify_reduction(const Hypergraph& h, int r, int s, int C,
                                 Variant variant, const TransformCaps& caps) {
    if (r < 2) throw InputError("verify_reduction: r must be >= 2");
    ReductionReport rep;
    if (variant == Variant::Defect) {
        Hypergraph t = transform_T(h, C, s, Variant::Defect, caps);
        rep.lhs = colorability_defect(h, r * s);
        rep.rhs = r * (s - 1) * C + colorability_defect(t, r);
    } else {
        Hypergraph t = transform_T(h, C, s, Variant::Alternation, caps);
        rep.lhs = alternation_number(t, r, caps.alt);
        rep.rhs = r * (s - 1) * C + alternation_number(h, r * s, caps.alt);
    }
    rep.holds = rep.lhs <= rep.rhs;
    return rep;
}

}  // namespace kneser
