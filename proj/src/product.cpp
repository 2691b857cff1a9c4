#include "kneser/product.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "kneser/errors.hpp"

namespace kneser {

ProductSpace::ProductSpace(std::vector<Hypergraph> f) : factors(std::move(f)) {
    if (factors.empty()) throw InputError("product needs at least one factor");
}

int64_t ProductSpace::vertex_count() const {
    int64_t c = 1;
    for (const auto& h : factors) c *= h.n;
    return c;
}

std::vector<int> ProductSpace::tuple_of(int64_t flat) const {
    if (flat < 1 || flat > vertex_count()) throw InputError("flat index out of range");
    int64_t rem = flat - 1;
    int t = (int)factors.size();
    std::vector<int> tup(t);
    for (int l = t - 1; l >= 0; --l) {
        tup[l] = (int)(rem % factors[l].n) + 1;
        rem /= factors[l].n;
    }
    return tup;
}

int64_t ProductSpace::flat_of(const std::vector<int>& tuple) const {
    if (tuple.size() != factors.size()) throw InputError("tuple arity mismatch");
    int64_t flat = 0;
    for (size_t l = 0; l < tuple.size(); ++l) {
        if (tuple[l] < 1 || tuple[l] > factors[l].n)
            throw InputError("tuple coordinate out of range");
        flat = flat * factors[l].n + (tuple[l] - 1);
    }
    return flat + 1;
}

bool product_is_edge(const ProductSpace& p, const std::vector<std::vector<int>>& s) {
    if (s.empty()) throw InputError("product_is_edge: S must be nonempty");
    int t = (int)p.factors.size();
    for (const auto& tup : s) {
        if ((int)tup.size() != t) throw InputError("product_is_edge: tuple arity mismatch");
        for (int l = 0; l < t; ++l)
            if (tup[l] < 1 || tup[l] > p.factors[l].n)
                throw InputError("product_is_edge: tuple coordinate out of range");
    }
    for (int l = 0; l < t; ++l) {
        Edge proj;
        proj.reserve(s.size());
        for (const auto& tup : s) proj.push_back(tup[l]);
        std::sort(proj.begin(), proj.end());
        proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
        if (!p.factors[l].has_edge(proj)) return false;
    }
    return true;
}

namespace {

std::string tuple_name(const std::vector<int>& idx) {
    std::string s = "(";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

// Iterate all index tuples over the given dimensions; f gets 0-based indices.
template <typename F>
void for_each_index_tuple(const std::vector<int>& dims, F&& f) {
    for (int d : dims)
        if (d == 0) return;
    std::vector<int> idx(dims.size(), 0);
    while (true) {
        f(idx);
        int l = (int)dims.size() - 1;
        while (l >= 0 && ++idx[l] == dims[l]) idx[l--] = 0;
        if (l < 0) break;
    }
}

}  // namespace

Hypergraph product_minimal_edges(const ProductSpace& p, const ProductCaps& caps) {
    int64_t nv = p.vertex_count();
    if (nv > caps.max_vertices)
        throw BudgetExceeded("product has " + std::to_string(nv) +
                             " vertices, materialization cap is " +
                             std::to_string(caps.max_vertices));
    int t = (int)p.factors.size();

    // The empty tuple set projects onto the empty edge of every factor; when
    // each factor has it, {} is the unique minimal product edge.
    bool all_have_empty = true;
    for (const auto& h : p.factors)
        if (!h.has_empty_edge()) all_have_empty = false;
    if (all_have_empty) return Hypergraph((int)nv, {{}});

    std::vector<std::vector<int64_t>> candidates;  // each: sorted flat vertex set
    std::vector<int> edims(t);
    for (int l = 0; l < t; ++l) edims[l] = (int)p.factors[l].edges.size();

    for_each_index_tuple(edims, [&](const std::vector<int>& eidx) {
        std::vector<const Edge*> es(t);
        for (int l = 0; l < t; ++l) es[l] = &p.factors[l].edges[eidx[l]];
        for (int l = 0; l < t; ++l)
            if (es[l]->empty()) return;  // no nonempty S can project onto the empty edge

        // Cells of e_1 x ... x e_t, as tuples and flat ids.
        std::vector<int> cdims(t);
        int64_t ncells = 1;
        for (int l = 0; l < t; ++l) {
            cdims[l] = (int)es[l]->size();
            ncells *= cdims[l];
        }
        if (ncells > 62 || (int64_t(1) << ncells) > caps.max_candidates)
            throw BudgetExceeded("candidate cap exceeded at edge tuple " + tuple_name(eidx));

        std::vector<std::vector<int>> cells;  // tuples
        cells.reserve(ncells);
        for_each_index_tuple(cdims, [&](const std::vector<int>& cidx) {
            std::vector<int> tup(t);
            for (int l = 0; l < t; ++l) tup[l] = (*es[l])[cidx[l]];
            cells.push_back(std::move(tup));
        });

        std::vector<uint64_t> masks;
        for (uint64_t m = 1; m < (uint64_t(1) << ncells); ++m) masks.push_back(m);
        std::stable_sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
            return std::popcount(a) < std::popcount(b);
        });

        std::vector<uint64_t> found;  // minimal masks within this tuple
        for (uint64_t m : masks) {
            bool super = false;
            for (uint64_t fm : found)
                if ((fm & m) == fm) { super = true; break; }
            if (super) continue;
            std::vector<std::vector<int>> s;
            for (int i = 0; i < ncells; ++i)
                if (m >> i & 1) s.push_back(cells[i]);
            if (!product_is_edge(p, s)) continue;
            found.push_back(m);
            std::vector<int64_t> flat;
            for (int i = 0; i < ncells; ++i)
                if (m >> i & 1) flat.push_back(p.flat_of(cells[i]));
            std::sort(flat.begin(), flat.end());
            candidates.push_back(std::move(flat));
        }
    });

    // Global inclusion-minimal filter across tuples.
    std::vector<Edge> es;
    for (const auto& c : candidates) {
        bool minimal = true;
        for (const auto& d : candidates) {
            if (d.size() < c.size() &&
                std::includes(c.begin(), c.end(), d.begin(), d.end())) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        Edge e;
        e.reserve(c.size());
        for (int64_t v : c) e.push_back((int)v);
        es.push_back(std::move(e));
    }
    return Hypergraph((int)nv, std::move(es));
}

bool product_is_proper(const ProductSpace& p, const Coloring& c) {
    int64_t nv = p.vertex_count();
    if ((int64_t)c.color.size() != nv)
        throw InputError("coloring does not cover all product vertices");
    int t = (int)p.factors.size();
    std::vector<int> edims(t);
    for (int l = 0; l < t; ++l) edims[l] = (int)p.factors[l].edges.size();

    bool proper = true;
    for_each_index_tuple(edims, [&](const std::vector<int>& eidx) {
        if (!proper) return;
        std::vector<const Edge*> es(t);
        bool all_empty = true, any_empty = false;
        for (int l = 0; l < t; ++l) {
            es[l] = &p.factors[l].edges[eidx[l]];
            if (es[l]->empty()) any_empty = true; else all_empty = false;
        }
        if (all_empty) { proper = false; return; }  // empty product edge
        if (any_empty) return;                      // contributes no edges

        std::vector<int> cdims(t);
        for (int l = 0; l < t; ++l) cdims[l] = (int)es[l]->size();
        // color -> per-factor bitmask of covered positions
        std::map<int, std::vector<uint64_t>> cover;
        for_each_index_tuple(cdims, [&](const std::vector<int>& cidx) {
            std::vector<int> tup(t);
            for (int l = 0; l < t; ++l) tup[l] = (*es[l])[cidx[l]];
            int q = c.color[p.flat_of(tup) - 1];
            auto& masks = cover.try_emplace(q, std::vector<uint64_t>(t, 0)).first->second;
            for (int l = 0; l < t; ++l) masks[l] |= uint64_t(1) << cidx[l];
        });
        for (const auto& [q, masks] : cover) {
            bool full = true;
            for (int l = 0; l < t; ++l)
                if (masks[l] != (cdims[l] == 64 ? ~uint64_t(0) : (uint64_t(1) << cdims[l]) - 1)) {
                    full = false;
                    break;
                }
            if (full) { proper = false; return; }
        }
    });
    return proper;
}

}  // namespace kneser
