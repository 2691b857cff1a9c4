#include "kneser/generators.hpp"

#include <algorithm>
#include <string>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

void combinations(int n, int k, const std::function<void(const Edge&)>& emit) {
    Edge cur;
    cur.reserve(k);
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == k) {
            emit(cur);
            return;
        }
        for (int v = start; v <= n - (k - (int)cur.size()) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

using Mask = std::vector<uint64_t>;

Mask edge_mask(const Edge& e, int n) {
    Mask m((n + 63) / 64, 0);
    for (int v : e) m[(v - 1) / 64] |= uint64_t(1) << ((v - 1) % 64);
    return m;
}

bool disjoint(const Mask& a, const Mask& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return false;
    return true;
}

// All r-subsets of pairwise disjoint edges of h, each encoded by its sorted
// list of (1-based) edge indices.
std::vector<Edge> disjoint_edge_rsets(const Hypergraph& h, int r) {
    int m = (int)h.edges.size();
    std::vector<Mask> masks;
    masks.reserve(m);
    for (const auto& e : h.edges) masks.push_back(edge_mask(e, h.n));

    std::vector<Edge> out;
    Edge cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= m - (r - (int)cur.size()) + 1; ++i) {
            bool ok = true;
            for (int j : cur)
                if (!disjoint(masks[i - 1], masks[j - 1])) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

Hypergraph complete_ksubsets(int n, int k) {
    if (k < 1 || k > n)
        throw InputError("complete_ksubsets: need 1 <= k <= n, got k=" +
                         std::to_string(k) + ", n=" + std::to_string(n));
    std::vector<Edge> es;
    combinations(n, k, [&](const Edge& e) { es.push_back(e); });
    Hypergraph h(n, std::move(es));
    h.full_symmetry = true;
    return h;
}

KneserResult kneser(const Hypergraph& h, int r) {
    if (r < 2) throw InputError("kneser: r must be >= 2");
    if (h.edges.empty()) throw InputError("kneser: base hypergraph has no edges");
    int m = (int)h.edges.size();
    KneserResult res{Hypergraph(m, disjoint_edge_rsets(h, r)), h.edges};
    return res;
}

Hypergraph stable_ksubsets(int n, int k) {
    if (k < 1 || k > n) throw InputError("stable_ksubsets: need 1 <= k <= n");
    std::vector<Edge> es;
    combinations(n, k, [&](const Edge& e) {
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                int d = e[j] - e[i];
                if (d < 2 || d > n - 2) return;  // cyclically adjacent
            }
        es.push_back(e);
    });
    return Hypergraph(n, std::move(es));
}

KneserResult matchings_hypergraph(const Hypergraph& g, int r) {
    if (r < 1) throw InputError("matchings_hypergraph: r must be >= 1");
    for (const auto& e : g.edges)
        if (e.size() != 2) throw InputError("matchings_hypergraph: input must be 2-uniform");
    int m = (int)g.edges.size();
    return KneserResult{Hypergraph(m, disjoint_edge_rsets(g, r)), g.edges};
}

KneserResult kneser_usual(int n, int k, int r) {
    return kneser(complete_ksubsets(n, k), r);
}

KneserResult kneser_stable(int n, int k, int r) {
    return kneser(stable_ksubsets(n, k), r);
}

}  // namespace kneser
