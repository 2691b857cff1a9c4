#include "kneser/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kneser/errors.hpp"

namespace kneser {

Hypergraph::Hypergraph(int n_, std::vector<Edge> raw) : n(n_) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    for (auto& e : raw) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (int v : e) {
            if (v < 1 || v > n) {
                throw InputError("edge vertex " + std::to_string(v) +
                                 " out of range [1," + std::to_string(n) + "]");
            }
        }
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    edges = std::move(raw);
}

bool Hypergraph::has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

bool Hypergraph::has_empty_edge() const {
    return !edges.empty() && edges.front().empty();
}

bool Hypergraph::has_edge_of_size_le1() const {
    // lex order does not sort by size ({4} sorts after {1,3}): scan all edges
    for (const auto& e : edges)
        if (e.size() <= 1) return true;
    return false;
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& e : edges)
        for (int v : e) deg[v - 1]++;
    return deg;
}

InducedResult induced(const Hypergraph& h, const std::vector<int>& x) {
    std::vector<int> xs = x;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (int v : xs) {
        if (v < 1 || v > h.n) throw InputError("induced: vertex out of range");
    }
    std::vector<int> to_new(h.n + 1, 0);
    for (int i = 0; i < (int)xs.size(); ++i) to_new[xs[i]] = i + 1;

    std::vector<Edge> kept;
    for (const auto& e : h.edges) {
        bool inside = true;
        for (int v : e)
            if (!to_new[v]) { inside = false; break; }
        if (!inside) continue;
        Edge re;
        re.reserve(e.size());
        for (int v : e) re.push_back(to_new[v]);
        kept.push_back(std::move(re));
    }
    return InducedResult{Hypergraph((int)xs.size(), std::move(kept)), xs};
}

bool is_proper(const Hypergraph& h, const Coloring& c) {
    if ((int)c.color.size() != h.n) throw InputError("coloring does not cover all vertices");
    for (const auto& e : h.edges) {
        if (e.size() <= 1) return false;  // always monochromatic
        int q = c.color[e[0] - 1];
        bool mono = true;
        for (size_t i = 1; i < e.size(); ++i) {
            if (c.color[e[i] - 1] != q) { mono = false; break; }
        }
        if (mono) return false;
    }
    return true;
}

Hypergraph minimal_edges(const Hypergraph& h) {
    const auto& es = h.edges;
    std::vector<Edge> keep;
    for (size_t i = 0; i < es.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            if (es[j].size() < es[i].size() &&
                std::includes(es[i].begin(), es[i].end(), es[j].begin(), es[j].end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) keep.push_back(es[i]);
    }
    Hypergraph out(h.n, std::move(keep));
    out.full_symmetry = h.full_symmetry;
    return out;
}

std::string to_json_string(const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.n;
    j["edges"] = h.edges;  // already lex-sorted
    return j.dump();
}

Hypergraph hypergraph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("hypergraph JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("hypergraph JSON must be an object with fields \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    if (n < 0) throw InputError("hypergraph JSON: n must be nonnegative");
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) {
        Edge e = je.get<Edge>();
        Edge sorted = e;
        std::sort(sorted.begin(), sorted.end());
        for (int v : sorted) {
            if (v < 1 || v > n)
                throw InputError("hypergraph JSON: vertex " + std::to_string(v) +
                                 " out of range [1," + std::to_string(n) + "]");
        }
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("hypergraph JSON: repeated vertex within an edge");
        edges.push_back(std::move(sorted));
    }
    auto dup = edges;
    std::sort(dup.begin(), dup.end());
    if (std::adjacent_find(dup.begin(), dup.end()) != dup.end())
        throw InputError("hypergraph JSON: duplicate edge");
    return Hypergraph(n, std::move(edges));
}

void save_hypergraph(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open file for writing: " + path);
    out << to_json_string(h) << "\n";
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return hypergraph_from_json(ss.str());
}

}  // namespace kneser
