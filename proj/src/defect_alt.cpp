#include "kneser/defect_alt.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kneser/errors.hpp"
#include "kneser/solver.hpp"

namespace kneser {

int SignedVector::nonzero_count() const {
    int c = 0;
    for (int8_t e : entries)
        if (e >= 0) ++c;
    return c;
}

std::vector<int> SignedVector::supp(int j) const {
    std::vector<int> s;
    for (int i = 0; i < size(); ++i)
        if (entries[i] == j) s.push_back(i + 1);
    return s;
}

bool SignedVector::contained_in(const SignedVector& other) const {
    if (r != other.r || entries.size() != other.entries.size())
        throw InputError("signed vector shape mismatch");
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i] >= 0 && other.entries[i] != entries[i]) return false;
    return true;
}

SignedVector SignedVector::rotated() const {
    SignedVector y = *this;
    for (auto& e : y.entries)
        if (e >= 0) e = (int8_t)((e + 1) % r);
    return y;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 1);
    return p;
}

bool Permutation::valid() const {
    std::vector<bool> seen(image.size(), false);
    for (int v : image) {
        if (v < 1 || v > (int)image.size() || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

int colorability_defect(const Hypergraph& h, int r) {
    if (r < 2) throw InputError("colorability_defect: r must be >= 2");
    std::vector<int> all(h.n);
    std::iota(all.begin(), all.end(), 1);
    for (int size = 0; size <= h.n; ++size) {
        // removal sets of this size, lexicographic
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<bool> removed(h.n + 1, false);
            for (int i : idx) removed[i + 1] = true;
            std::vector<int> keep;
            for (int v = 1; v <= h.n; ++v)
                if (!removed[v]) keep.push_back(v);
            if (is_k_colorable(induced(h, keep).h, r)) return size;
            // next combination
            int i = size - 1;
            while (i >= 0 && idx[i] == h.n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw CriticalFinding("empty hypergraph not r-colorable");
}

int usual_defect_formula(int n, int k, int r) {
    if (r < 2) throw InputError("usual_defect_formula: r must be >= 2");
    if (k < 1 || k > n) throw InputError("usual_defect_formula: need 1 <= k <= n");
    return std::max(0, n - r * (k - 1));
}

int alt_under_perm(const SignedVector& x, const Permutation& pi) {
    if (x.r < 2) throw InputError("alt_under_perm: modulus must be >= 2");
    if ((int)pi.image.size() != x.size() || !pi.valid())
        throw InputError("alt_under_perm: invalid permutation");
    int count = 0, last = -1;
    for (int i = 0; i < x.size(); ++i) {
        int8_t v = x.entries[pi.image[i] - 1];
        if (v >= 0 && v != last) {
            ++count;
            last = v;
        }
    }
    return count;
}

namespace {

// DFS over positions in pi order, building x entry by entry. Admissibility is
// checked incrementally; an entry equal to the previous counted value is
// dominated by zero and never tried. Optimistic bound: current length plus
// remaining positions.
class AltSearch {
  public:
    enum class Mode { AllSupportsFree, AtMostOneSideHasEdge };

    AltSearch(const Hypergraph& h, int r, Mode mode) : r_(r), n_(h.n), mode_(mode) {
        vertex_edges_.resize(n_ + 1);
        for (const auto& e : h.edges) {
            uint32_t m = 0;
            for (int v : e) m |= uint32_t(1) << (v - 1);
            edge_masks_.push_back(m);
            for (int v : e) vertex_edges_[v].push_back(m);
        }
        has_empty_edge_ = h.has_empty_edge();
    }

    int run(const Permutation& pi, std::optional<int> threshold) {
        if (has_empty_edge_) return 0;  // no admissible vector at all
        pi_ = &pi;
        best_ = 0;
        threshold_ = threshold;
        supp_.assign(r_, 0);
        side_has_edge_.assign(r_, false);
        dfs(0, -1, 0);
        return best_;
    }

  private:
    bool completes_edge(int v, uint32_t new_supp) const {
        for (uint32_t em : vertex_edges_[v])
            if ((em & new_supp) == em) return true;
        return false;
    }

    void dfs(int posidx, int last, int len) {
        best_ = std::max(best_, len);
        if (threshold_ && best_ >= *threshold_) return;
        if (posidx == n_ || len + (n_ - posidx) <= best_) return;
        int v = pi_->image[posidx];
        for (int j = 0; j < r_; ++j) {
            if (j == last) continue;  // dominated by leaving the entry zero
            uint32_t ns = supp_[j] | (uint32_t(1) << (v - 1));
            bool adds_edge = completes_edge(v, ns);
            if (mode_ == Mode::AllSupportsFree) {
                if (adds_edge) continue;
            } else {
                bool other = false;
                for (int j2 = 0; j2 < r_; ++j2)
                    if (j2 != j && side_has_edge_[j2]) other = true;
                if (adds_edge && other) continue;
            }
            uint32_t saved = supp_[j];
            bool saved_flag = side_has_edge_[j];
            supp_[j] = ns;
            side_has_edge_[j] = side_has_edge_[j] || adds_edge;
            dfs(posidx + 1, j, len + 1);
            supp_[j] = saved;
            side_has_edge_[j] = saved_flag;
            if (threshold_ && best_ >= *threshold_) return;
        }
        dfs(posidx + 1, last, len);  // entry zero
    }

    int r_, n_;
    Mode mode_;
    bool has_empty_edge_ = false;
    std::vector<uint32_t> edge_masks_;
    std::vector<std::vector<uint32_t>> vertex_edges_;
    const Permutation* pi_ = nullptr;
    int best_ = 0;
    std::optional<int> threshold_;
    std::vector<uint32_t> supp_;
    std::vector<bool> side_has_edge_;
};

}  // namespace

int max_alt_for_perm(const Hypergraph& h, int r, const Permutation& pi,
                     const AltCaps& caps, std::optional<int> threshold) {
    if (r < 2) throw InputError("max_alt_for_perm: r must be >= 2");
    if ((int)pi.image.size() != h.n || !pi.valid())
        throw InputError("max_alt_for_perm: invalid permutation");
    if (h.n > caps.max_n_per_perm)
        throw BudgetExceeded("max_alt_for_perm: n=" + std::to_string(h.n) +
                             " exceeds cap " + std::to_string(caps.max_n_per_perm));
    AltSearch s(h, r, AltSearch::Mode::AllSupportsFree);
    return s.run(pi, threshold);
}

AltResult alternation_number_with_perm(const Hypergraph& h, int r, const AltCaps& caps) {
    if (r < 2) throw InputError("alternation_number: r must be >= 2");
    if (h.n > caps.max_n_exact)
        throw BudgetExceeded(
            "alternation_number: n=" + std::to_string(h.n) + " exceeds cap " +
            std::to_string(caps.max_n_exact) +
            "; fall back to max_alt_for_perm at a fixed permutation for a weaker bound");
    Permutation id = Permutation::identity(h.n);
    if (h.full_symmetry || h.n <= 1)
        return AltResult{max_alt_for_perm(h, r, id, caps), id};

    AltSearch s(h, r, AltSearch::Mode::AllSupportsFree);
    int best = s.run(id, std::nullopt);
    Permutation best_pi = id;
    Permutation pi = id;
    while (std::next_permutation(pi.image.begin(), pi.image.end())) {
        int v = s.run(pi, best);  // abandon once the inner max reaches best
        if (v < best) {
            best = v;
            best_pi = pi;
        }
    }
    return AltResult{best, best_pi};
}

int alternation_number(const Hypergraph& h, int r, const AltCaps& caps) {
    return alternation_number_with_perm(h, r, caps).value;
}

int strong_alt2(const Hypergraph& h, std::optional<Permutation> fixed, const AltCaps& caps) {
    AltSearch s(h, 2, AltSearch::Mode::AtMostOneSideHasEdge);
    if (fixed) {
        if ((int)fixed->image.size() != h.n || !fixed->valid())
            throw InputError("strong_alt2: invalid permutation");
        if (h.n > caps.max_n_per_perm)
            throw BudgetExceeded("strong_alt2: n exceeds per-permutation cap");
        return s.run(*fixed, std::nullopt);
    }
    if (h.n > caps.max_n_exact)
        throw BudgetExceeded("strong_alt2: n=" + std::to_string(h.n) +
                             " exceeds cap " + std::to_string(caps.max_n_exact));
    Permutation pi = Permutation::identity(h.n);
    int best = s.run(pi, std::nullopt);
    if (!h.full_symmetry) {
        while (std::next_permutation(pi.image.begin(), pi.image.end())) {
            int v = s.run(pi, best);
            best = std::min(best, v);
        }
    }
    return best;
}

}  // namespace kneser
