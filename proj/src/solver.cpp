#include "kneser/solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

// Backtracking k-coloring over the minimal edges of a hypergraph. Dynamic
// most-constrained-vertex order (ties: degree descending, then index) with
// forward pruning: a color is never placed if it completes a monochromatic
// edge. Color symmetry broken by capping fresh colors at 1 + max used.
class HypergraphSearch {
  public:
    HypergraphSearch(const Hypergraph& h, int k) : k_(k), n_(h.n) {
        for (const auto& e : h.edges) {
            std::vector<int> e0;
            e0.reserve(e.size());
            for (int v : e) e0.push_back(v - 1);
            edges_.push_back(std::move(e0));
        }
        incidence_.resize(n_);
        for (int i = 0; i < (int)edges_.size(); ++i)
            for (int v : edges_[i]) incidence_[v].push_back(i);
        degree_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) degree_[v] = (int)incidence_[v].size();
        color_.assign(n_, 0);
        etot_.assign(edges_.size(), 0);
        ecnt_.assign(edges_.size(), std::vector<int>(k_ + 1, 0));
    }

    std::optional<Coloring> run(SearchStats& stats) {
        bool ok = dfs(0, 0, stats);
        stats.complete = true;
        if (!ok) return std::nullopt;
        Coloring c;
        c.color.assign(color_.begin(), color_.end());
        c.num_colors = *std::max_element(color_.begin(), color_.end());
        return c;
    }

  private:
    bool forbidden(int v, int q) const {
        for (int ei : incidence_[v]) {
            const auto& e = edges_[ei];
            if (etot_[ei] == (int)e.size() - 1 && ecnt_[ei][q] == (int)e.size() - 1)
                return true;
        }
        return false;
    }

    bool dfs(int assigned, int maxused, SearchStats& stats) {
        ++stats.nodes;
        if (assigned == n_) return true;
        int limit = std::min(k_, maxused + 1);

        int best = -1, best_sat = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[v]) continue;
            int sat = 0;
            for (int q = 1; q <= limit; ++q)
                if (forbidden(v, q)) ++sat;
            if (sat > best_sat ||
                (sat == best_sat && degree_[v] > degree_[best])) {
                best = v;
                best_sat = sat;
            }
        }
        if (best_sat >= limit) return false;  // some vertex has no legal color

        int v = best;
        for (int q = 1; q <= limit; ++q) {
            if (forbidden(v, q)) continue;
            color_[v] = q;
            for (int ei : incidence_[v]) {
                ++etot_[ei];
                ++ecnt_[ei][q];
            }
            if (dfs(assigned + 1, std::max(maxused, q), stats)) return true;
            for (int ei : incidence_[v]) {
                --etot_[ei];
                --ecnt_[ei][q];
            }
            color_[v] = 0;
        }
        return false;
    }

    int k_, n_;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incidence_;
    std::vector<int> degree_;
    std::vector<int> color_;
    std::vector<int> etot_;
    std::vector<std::vector<int>> ecnt_;
};

}  // namespace

std::optional<Coloring> is_k_colorable(const Hypergraph& h, int k, SearchStats* stats) {
    if (k < 1) throw InputError("is_k_colorable: k must be >= 1");
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    st = SearchStats{};
    if (h.n == 0) {
        st.complete = true;
        return Coloring{{}, 0};
    }
    if (h.has_edge_of_size_le1()) {
        st.complete = true;
        return std::nullopt;
    }
    Hypergraph m = minimal_edges(h);
    if (m.edges.empty()) {
        st.complete = true;
        return Coloring{std::vector<int>(h.n, 1), 1};
    }
    HypergraphSearch search(m, k);
    return search.run(st);
}

ChromaticResult chromatic_number(const Hypergraph& h) {
    ChromaticResult res;
    if (h.has_edge_of_size_le1()) {
        res.refutation.complete = true;
        return res;  // UNCOLORABLE
    }
    if (h.n == 0) {
        res.chi = 0;
        res.refutation.complete = true;
        return res;
    }
    SearchStats last_no{0, true};
    for (int k = 1; k <= h.n; ++k) {
        SearchStats st;
        auto w = is_k_colorable(h, k, &st);
        if (w) {
            res.chi = k;
            res.witness = std::move(w);
            res.refutation = last_no;
            return res;
        }
        last_no = st;
    }
    throw CriticalFinding("hypergraph with no small edge not n-colorable");
}

// ---------------------------------------------------------------------------
// Product search. Edge tuples stay implicit; per tuple/color/factor we track
// how many positions of the factor edge are covered by assigned cells, so a
// color is forbidden for a cell exactly when placing it would complete a
// covering (monochromatic) set.
// ---------------------------------------------------------------------------

namespace {

struct TupleRef {
    int tuple;
    std::vector<int> pos;  // position of the cell inside each factor edge
};

class ProductSearch {
  public:
    ProductSearch(const ProductSpace& p, int k) : p_(p), k_(k) {
        nv_ = (int)p.vertex_count();
        int t = (int)p.factors.size();
        std::vector<int> edims(t);
        for (int l = 0; l < t; ++l) edims[l] = (int)p.factors[l].edges.size();

        std::vector<int> eidx(t, 0);
        bool any = t > 0;
        for (int l = 0; l < t; ++l)
            if (edims[l] == 0) any = false;
        while (any) {
            add_tuple(eidx);
            int l = t - 1;
            while (l >= 0 && ++eidx[l] == edims[l]) eidx[l--] = 0;
            if (l < 0) break;
        }
        membership_.resize(nv_);
        for (int ti = 0; ti < (int)tuples_.size(); ++ti) {
            const auto& tp = tuples_[ti];
            std::vector<int> cidx(tp.sizes.size(), 0);
            while (true) {
                std::vector<int> tup(tp.sizes.size());
                for (size_t l = 0; l < tp.sizes.size(); ++l) tup[l] = tp.edge[l][cidx[l]];
                int v = (int)p.flat_of(tup) - 1;
                membership_[v].push_back(TupleRef{ti, cidx});
                int l = (int)tp.sizes.size() - 1;
                while (l >= 0 && ++cidx[l] == tp.sizes[l]) cidx[l--] = 0;
                if (l < 0) break;
            }
        }
        degree_.assign(nv_, 0);
        for (int v = 0; v < nv_; ++v) degree_[v] = (int)membership_[v].size();
        color_.assign(nv_, 0);
        cnt_.resize(tuples_.size());
        full_.resize(tuples_.size());
        for (size_t ti = 0; ti < tuples_.size(); ++ti) {
            const auto& tp = tuples_[ti];
            cnt_[ti].assign(k_ + 1, {});
            full_[ti].assign(k_ + 1, {});
            for (int q = 0; q <= k_; ++q) {
                cnt_[ti][q].resize(tp.sizes.size());
                full_[ti][q].assign(tp.sizes.size(), 0);
                for (size_t l = 0; l < tp.sizes.size(); ++l)
                    cnt_[ti][q][l].assign(tp.sizes[l], 0);
            }
        }
    }

    std::optional<Coloring> run(SearchStats& stats) {
        bool ok = dfs(0, 0, stats);
        stats.complete = true;
        if (!ok) return std::nullopt;
        Coloring c;
        c.color.assign(color_.begin(), color_.end());
        c.num_colors = *std::max_element(color_.begin(), color_.end());
        return c;
    }

  private:
    struct Tuple {
        std::vector<std::vector<int>> edge;  // factor edges (vertex lists)
        std::vector<int> sizes;
    };

    void add_tuple(const std::vector<int>& eidx) {
        Tuple tp;
        for (size_t l = 0; l < eidx.size(); ++l) {
            const Edge& e = p_.factors[l].edges[eidx[l]];
            if (e.empty()) return;  // contributes no edges (unless all empty: handled upstream)
            tp.edge.push_back(e);
            tp.sizes.push_back((int)e.size());
        }
        tuples_.push_back(std::move(tp));
    }

    bool forbidden(int v, int q) const {
        for (const auto& ref : membership_[v]) {
            const auto& tp = tuples_[ref.tuple];
            bool covers = true;
            for (size_t l = 0; l < tp.sizes.size(); ++l) {
                int f = full_[ref.tuple][q][l];
                if (cnt_[ref.tuple][q][l][ref.pos[l]] == 0) ++f;
                if (f != tp.sizes[l]) { covers = false; break; }
            }
            if (covers) return true;
        }
        return false;
    }

    void apply(int v, int q, int delta) {
        for (const auto& ref : membership_[v]) {
            for (size_t l = 0; l < ref.pos.size(); ++l) {
                int& c = cnt_[ref.tuple][q][l][ref.pos[l]];
                if (delta > 0) {
                    if (c++ == 0) ++full_[ref.tuple][q][l];
                } else {
                    if (--c == 0) --full_[ref.tuple][q][l];
                }
            }
        }
    }

    bool dfs(int assigned, int maxused, SearchStats& stats) {
        ++stats.nodes;
        if (assigned == nv_) return true;
        int limit = std::min(k_, maxused + 1);

        int best = -1, best_sat = -1;
        for (int v = 0; v < nv_; ++v) {
            if (color_[v]) continue;
            int sat = 0;
            for (int q = 1; q <= limit; ++q)
                if (forbidden(v, q)) ++sat;
            if (sat > best_sat ||
                (sat == best_sat && degree_[v] > degree_[best])) {
                best = v;
                best_sat = sat;
            }
        }
        if (best_sat >= limit) return false;

        int v = best;
        for (int q = 1; q <= limit; ++q) {
            if (forbidden(v, q)) continue;
            color_[v] = q;
            apply(v, q, +1);
            if (dfs(assigned + 1, std::max(maxused, q), stats)) return true;
            apply(v, q, -1);
            color_[v] = 0;
        }
        return false;
    }

    const ProductSpace& p_;
    int k_, nv_;
    std::vector<Tuple> tuples_;
    std::vector<std::vector<TupleRef>> membership_;
    std::vector<int> degree_;
    std::vector<int> color_;
    // cnt_[tuple][color][factor][pos], full_[tuple][color][factor]
    std::vector<std::vector<std::vector<std::vector<int>>>> cnt_;
    std::vector<std::vector<std::vector<int>>> full_;
};

// Uncolorable iff the product has an edge of size <= 1: the empty edge (every
// factor has the empty edge) or a singleton (a tuple of singleton edges).
bool product_uncolorable(const ProductSpace& p) {
    bool all_have_empty = true;
    bool all_have_singleton = true;
    for (const auto& h : p.factors) {
        if (!h.has_empty_edge()) all_have_empty = false;
        bool single = false;
        for (const auto& e : h.edges)
            if (e.size() == 1) { single = true; break; }
        if (!single) all_have_singleton = false;
    }
    return all_have_empty || all_have_singleton;
}

bool product_has_edge(const ProductSpace& p) {
    bool all_have_empty = true;
    for (const auto& h : p.factors)
        if (!h.has_empty_edge()) all_have_empty = false;
    if (all_have_empty) return true;
    for (const auto& h : p.factors) {
        bool nonempty_edge = false;
        for (const auto& e : h.edges)
            if (!e.empty()) { nonempty_edge = true; break; }
        if (!nonempty_edge) return false;
    }
    return true;
}

constexpr int64_t kProductSolveCap = 200'000;

}  // namespace

std::optional<Coloring> is_k_colorable(const ProductSpace& p, int k, SearchStats* stats) {
    if (k < 1) throw InputError("is_k_colorable: k must be >= 1");
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    st = SearchStats{};
    int64_t nv = p.vertex_count();
    if (nv == 0) {
        st.complete = true;
        return Coloring{{}, 0};
    }
    if (product_uncolorable(p)) {
        st.complete = true;
        return std::nullopt;
    }
    if (!product_has_edge(p)) {
        st.complete = true;
        return Coloring{std::vector<int>(nv, 1), 1};
    }
    // Pullback fast path: a proper <=k coloring of any factor lifts through
    // its projection to a proper coloring of the product.
    for (size_t l = 0; l < p.factors.size(); ++l) {
        SearchStats fst;
        auto w = is_k_colorable(p.factors[l], k, &fst);
        st.nodes += fst.nodes;
        if (w) {
            Coloring c;
            c.color.resize(nv);
            for (int64_t v = 1; v <= nv; ++v)
                c.color[v - 1] = w->color[p.tuple_of(v)[l] - 1];
            c.num_colors = w->num_colors;
            assert(product_is_proper(p, c));
            st.complete = true;
            return c;
        }
    }
    if (nv > kProductSolveCap)
        throw BudgetExceeded("product coloring search: " + std::to_string(nv) +
                             " vertices exceeds cap " + std::to_string(kProductSolveCap));
    ProductSearch search(p, k);
    auto w = search.run(st);
    if (w) assert(product_is_proper(p, *w));
    return w;
}

ChromaticResult chromatic_number(const ProductSpace& p) {
    ChromaticResult res;
    if (p.vertex_count() == 0) {
        res.chi = 0;
        res.refutation.complete = true;
        return res;
    }
    if (product_uncolorable(p)) {
        res.refutation.complete = true;
        return res;
    }
    SearchStats last_no{0, true};
    for (int k = 1;; ++k) {
        SearchStats st;
        auto w = is_k_colorable(p, k, &st);
        if (w) {
            res.chi = k;
            res.witness = std::move(w);
            res.refutation = last_no;
            return res;
        }
        last_no = st;
    }
}

int afl_formula(int n, int k, int r) {
    if (r < 2) throw InputError("afl_formula: r must be >= 2");
    if (k < 1) throw InputError("afl_formula: k must be >= 1");
    if (n < r * k)
        throw InputError("afl_formula: asserted only for n >= rk (n=" +
                         std::to_string(n) + ", rk=" + std::to_string(r * k) + ")");
    return (n - r * (k - 1) + r - 2) / (r - 1);
}

}  // namespace kneser
