// Command-line harness: generation, chromatic bounds vs. exact values,
// product equality checks, Z_p-Tucker certification, reduction verification.
//
// Exit codes: 0 success, 1 mathematical invariant violated, 2 input error,
// 3 budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kneser/defect_alt.hpp"
#include "kneser/errors.hpp"
#include "kneser/generators.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/product.hpp"
#include "kneser/solver.hpp"
#include "kneser/tucker.hpp"

using nlohmann::json;
using namespace kneser;

namespace {

constexpr const char* kCodeVersion = "kneser-lab 0.1.0";

// ---------------------------------------------------------------------------
// Hypergraph specs: "complete:n,k", "stable:n,k", "kneser-usual:n,k,r",
// "kneser-stable:n,k,r", "kneser-of:r:path", "matchings:r:path", "file:path",
// or a bare path to a JSON hypergraph file.
// ---------------------------------------------------------------------------

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

Hypergraph parse_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return load_hypergraph(spec);
    std::string family = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (family == "file") return load_hypergraph(rest);
    if (family == "kneser-of" || family == "matchings") {
        auto colon2 = rest.find(':');
        if (colon2 == std::string::npos)
            throw InputError("spec \"" + spec + "\": expected " + family + ":<r>:<path>");
        int r = std::stoi(rest.substr(0, colon2));
        Hypergraph base = load_hypergraph(rest.substr(colon2 + 1));
        return family == "kneser-of" ? kneser::kneser(base, r).kg
                                     : matchings_hypergraph(base, r).kg;
    }
    std::vector<int> p;
    try {
        p = parse_ints(rest);
    } catch (const std::exception&) {
        throw InputError("spec \"" + spec + "\": bad parameter list");
    }
    if (family == "complete" && p.size() == 2) return complete_ksubsets(p[0], p[1]);
    if (family == "stable" && p.size() == 2) return stable_ksubsets(p[0], p[1]);
    if (family == "kneser-usual" && p.size() == 3) return kneser_usual(p[0], p[1], p[2]).kg;
    if (family == "kneser-stable" && p.size() == 3) return kneser_stable(p[0], p[1], p[2]).kg;
    throw InputError("unknown generator spec \"" + spec + "\"");
}

bool spec_is_complete_family(const std::string& spec) {
    return spec.rfind("complete:", 0) == 0;
}

// ---------------------------------------------------------------------------
// Append-only JSONL result cache keyed by a stable hash of the request.
// ---------------------------------------------------------------------------

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class ResultCache {
  public:
    ResultCache(std::string path, bool recheck) : path_(std::move(path)), recheck_(recheck) {
        if (path_.empty()) return;
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("key")) continue;
            entries_[j["key"].get<std::string>()] = j["result"];
        }
    }

    template <typename F>
    json get_or_compute(const std::string& op, const json& request, F&& compute) {
        if (path_.empty()) return compute();
        std::ostringstream key_src;
        key_src << op << "|" << request.dump() << "|" << kCodeVersion;
        char key[32];
        snprintf(key, sizeof key, "%016llx",
                 (unsigned long long)fnv1a64(key_src.str()));
        auto it = entries_.find(key);
        if (it != entries_.end() && !recheck_) return it->second;
        json result = compute();
        if (it != entries_.end()) {
            if (it->second != result)
                throw CriticalFinding("cache recheck mismatch for op " + op);
            return result;
        }
        json line;
        line["key"] = key;
        line["op"] = op;
        line["request"] = request;
        line["version"] = kCodeVersion;
        line["result"] = result;
        std::ofstream out(path_, std::ios::app);
        out << line.dump() << "\n";
        entries_[key] = result;
        return result;
    }

  private:
    std::string path_;
    bool recheck_;
    std::map<std::string, json> entries_;
};

int ceil_div(int a, int b) { return a <= 0 ? (a == 0 ? 0 : -((-a) / b)) : (a + b - 1) / b; }

void emit(const json& j, bool csv) {
    if (!csv) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::string header, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_primitive()) continue;
        if (!header.empty()) { header += ","; row += ","; }
        header += it.key();
        row += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    }
    std::cout << header << "\n" << row << "\n";
}

json bound_report(const std::string& spec, int r, ResultCache& cache) {
    Hypergraph h = parse_spec(spec);
    json req{{"spec", spec}, {"r", r}};
    return cache.get_or_compute("bound", req, [&]() -> json {
        json j;
        j["instance"] = spec;
        j["r"] = r;
        j["n"] = h.n;
        int chi;
        if (h.edges.empty()) {
            chi = 0;  // KG^r of an edgeless hypergraph has no vertices
        } else {
            chi = *chromatic_number(kneser::kneser(h, r).kg).chi;
        }
        int cd = colorability_defect(h, r);
        int alt = alternation_number(h, r);
        int cd_bound = ceil_div(cd, r - 1);
        int alt_bound = ceil_div(h.n - alt, r - 1);
        j["chi"] = chi;
        j["cd"] = cd;
        j["alt"] = alt;
        j["cd_bound"] = cd_bound;
        j["alt_bound"] = alt_bound;
        if (spec_is_complete_family(spec)) {
            auto p = parse_ints(spec.substr(spec.find(':') + 1));
            if (p[0] >= r * p[1]) j["afl"] = afl_formula(p[0], p[1], r);
        }
        if (chi < cd_bound || chi < alt_bound || alt_bound < cd_bound)
            throw CriticalFinding("bound invariant violated: chi=" + std::to_string(chi) +
                                  " cd_bound=" + std::to_string(cd_bound) +
                                  " alt_bound=" + std::to_string(alt_bound));
        return j;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chromatic-number laboratory for Kneser hypergraphs and their categorical products"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    int threads = 1;
    std::string cache_path;
    bool csv = false, recheck = false;
    int64_t budget = 10'000'000;
    app.add_option("--seed", seed, "seed for sampled modes");
    app.add_option("--threads", threads, "worker cap (computations are deterministic; currently single-threaded)");
    app.add_option("--cache", cache_path, "append-only JSONL result cache");
    app.add_flag("--csv", csv, "emit flat CSV rows instead of JSON");
    app.add_flag("--recheck", recheck, "re-verify cached results against fresh computations");
    app.add_option("--budget", budget, "enumeration budget for exhaustive checks");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a hypergraph and write it as JSON");
    std::string gen_spec, gen_out;
    gen->add_option("spec", gen_spec, "generator spec, e.g. complete:4,2 or kneser-usual:5,2,2")->required();
    gen->add_option("-o,--out", gen_out, "output path")->required();

    // bound
    auto* bound = app.add_subcommand("bound", "chi(KG^r(H)) vs. defect and alternation lower bounds");
    std::string bound_spec;
    int bound_r = 2;
    bound->add_option("spec", bound_spec, "base hypergraph spec or file")->required();
    bound->add_option("-r", bound_r, "Kneser rank")->required();

    // product
    auto* product = app.add_subcommand("product", "exact chi of a product of Kneser hypergraphs vs. bounds");
    std::vector<std::string> product_specs;
    int product_r = 2;
    product->add_option("--factor", product_specs, "base hypergraph spec (repeatable)")->required();
    product->add_option("-r", product_r, "common Kneser rank")->required();

    // certify
    auto* certify = app.add_subcommand("certify", "build the lambda map and check the Z_p-Tucker hypotheses");
    std::vector<std::string> cert_specs;
    int cert_p = 2, cert_C = 2;
    std::string cert_coloring, cert_variant = "defect", cert_mode = "exhaustive", cert_out;
    int64_t cert_count = 100000;
    certify->add_option("--factor", cert_specs, "base hypergraph spec (repeatable)")->required();
    certify->add_option("-p", cert_p, "prime rank")->required();
    certify->add_option("-C", cert_C, "number of colors")->required();
    certify->add_option("--coloring", cert_coloring, "JSON coloring file; omitted = derive by exact search");
    certify->add_option("--variant", cert_variant, "defect | alternation");
    certify->add_option("--mode", cert_mode, "exhaustive | sampled");
    certify->add_option("--count", cert_count, "sampled mode: chains per property");
    certify->add_option("-o,--out", cert_out, "certificate output path");

    // verify-reduction
    auto* vr = app.add_subcommand("verify-reduction", "check the prime-to-composite reduction inequality");
    std::string vr_spec, vr_variant = "defect";
    int vr_r = 2, vr_s = 2, vr_C = 1;
    vr->add_option("spec", vr_spec, "hypergraph spec or file")->required();
    vr->add_option("-r", vr_r)->required();
    vr->add_option("-s", vr_s)->required();
    vr->add_option("-C", vr_C)->required();
    vr->add_option("--variant", vr_variant, "defect | alternation");

    // alt / defect / chromatic
    auto* altc = app.add_subcommand("alt", "r-alternation number");
    std::string alt_spec;
    int alt_r = 2;
    altc->add_option("spec", alt_spec)->required();
    altc->add_option("-r", alt_r)->required();

    auto* defc = app.add_subcommand("defect", "r-colorability defect");
    std::string def_spec;
    int def_r = 2;
    defc->add_option("spec", def_spec)->required();
    defc->add_option("-r", def_r)->required();

    auto* chrc = app.add_subcommand("chromatic", "exact chromatic number of the given hypergraph");
    std::string chr_spec;
    chrc->add_option("spec", chr_spec)->required();

    // global flags may appear after the subcommand name
    for (auto* sub : {gen, bound, product, certify, vr, altc, defc, chrc})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ResultCache cache(cache_path, recheck);

        if (*gen) {
            Hypergraph h = parse_spec(gen_spec);
            save_hypergraph(h, gen_out);
            std::cout << "wrote " << gen_out << ": " << h.n << " vertices, "
                      << h.edges.size() << " edges\n";
        } else if (*bound) {
            emit(bound_report(bound_spec, bound_r, cache), csv);
        } else if (*product) {
            json j;
            j["r"] = product_r;
            std::vector<Hypergraph> bases, kgs;
            int min_chi = INT32_MAX, min_cd = INT32_MAX, min_nalt = INT32_MAX;
            bool all_complete = true;
            for (const auto& spec : product_specs) {
                Hypergraph h = parse_spec(spec);
                bases.push_back(h);
                kgs.push_back(kneser::kneser(h, product_r).kg);
                min_chi = std::min(min_chi, *chromatic_number(kgs.back()).chi);
                min_cd = std::min(min_cd, colorability_defect(h, product_r));
                min_nalt = std::min(min_nalt, h.n - alternation_number(h, product_r));
                if (!spec_is_complete_family(spec)) all_complete = false;
            }
            ProductSpace ps(kgs);
            int chi = *chromatic_number(ps).chi;
            int cd_bound = ceil_div(min_cd, product_r - 1);
            int alt_bound = ceil_div(min_nalt, product_r - 1);
            j["chi"] = chi;
            j["pullback_upper"] = min_chi;
            j["cd_bound"] = cd_bound;
            j["alt_bound"] = alt_bound;
            j["factors"] = product_specs;
            if (chi > min_chi || chi < cd_bound || chi < alt_bound)
                throw CriticalFinding("product bound invariant violated");
            if (all_complete) {
                j["min_factor_chi_equality"] = (chi == min_chi);
                if (chi != min_chi)
                    throw CriticalFinding("usual-Kneser product equality violated: chi=" +
                                          std::to_string(chi) + " min factor chi=" +
                                          std::to_string(min_chi));
            }
            emit(j, csv);
        } else if (*certify) {
            LambdaContext ctx;
            for (const auto& spec : cert_specs) ctx.factors.push_back(parse_spec(spec));
            ctx.p = cert_p;
            ctx.variant = cert_variant == "alternation" ? Variant::Alternation : Variant::Defect;
            if (ctx.variant == Variant::Alternation) {
                for (const auto& h : ctx.factors)
                    ctx.perms.push_back(alternation_number_with_perm(h, cert_p).pi);
            }
            ctx.coloring.C = cert_C;
            for (const auto& h : ctx.factors)
                ctx.coloring.dims.push_back((int)h.edges.size());
            if (!cert_coloring.empty()) {
                std::ifstream in(cert_coloring);
                if (!in) throw InputError("cannot open coloring file: " + cert_coloring);
                json jc = json::parse(in);
                ctx.coloring.color = jc.at("colors").get<std::vector<int>>();
            } else {
                std::vector<Hypergraph> kgs;
                for (const auto& h : ctx.factors) kgs.push_back(kneser::kneser(h, cert_p).kg);
                auto w = is_k_colorable(ProductSpace(kgs), cert_C);
                if (!w)
                    throw InputError("no proper coloring of the product with C=" +
                                     std::to_string(cert_C) + " colors exists");
                ctx.coloring.color = w->color;
            }
            TuckerInstance inst = build_lambda(ctx);
            CheckMode mode;
            mode.exhaustive = (cert_mode != "sampled");
            mode.seed = seed;
            mode.count = cert_count;
            mode.budget = budget;
            TuckerReport rep = check_tucker(inst, mode);
            std::string doc = rep.to_json_string();
            if (!cert_out.empty()) {
                std::ofstream out(cert_out);
                out << doc << "\n";
            }
            std::cout << doc << "\n";
            if (!rep.all_ok() || !rep.conclusion_holds)
                throw CriticalFinding("Tucker certification failed");
        } else if (*vr) {
            Hypergraph h = parse_spec(vr_spec);
            Variant v = vr_variant == "alternation" ? Variant::Alternation : Variant::Defect;
            ReductionReport rep = verify_reduction(h, vr_r, vr_s, vr_C, v);
            json j{{"instance", vr_spec}, {"r", vr_r}, {"s", vr_s}, {"C", vr_C},
                   {"variant", vr_variant}, {"lhs", rep.lhs}, {"rhs", rep.rhs},
                   {"holds", rep.holds}};
            emit(j, csv);
            if (!rep.holds)
                throw CriticalFinding("reduction inequality violated: contradicts a proven lemma");
        } else if (*altc) {
            Hypergraph h = parse_spec(alt_spec);
            json req{{"spec", alt_spec}, {"r", alt_r}};
            json j = cache.get_or_compute("alt", req, [&]() -> json {
                return json{{"alt", alternation_number(h, alt_r)}};
            });
            j["instance"] = alt_spec;
            j["r"] = alt_r;
            emit(j, csv);
        } else if (*defc) {
            Hypergraph h = parse_spec(def_spec);
            json req{{"spec", def_spec}, {"r", def_r}};
            json j = cache.get_or_compute("defect", req, [&]() -> json {
                return json{{"cd", colorability_defect(h, def_r)}};
            });
            j["instance"] = def_spec;
            j["r"] = def_r;
            emit(j, csv);
        } else if (*chrc) {
            Hypergraph h = parse_spec(chr_spec);
            json req{{"spec", chr_spec}};
            json j = cache.get_or_compute("chromatic", req, [&]() -> json {
                auto res = chromatic_number(h);
                json out;
                if (res.chi) {
                    out["chi"] = *res.chi;
                    out["refutation_nodes"] = res.refutation.nodes;
                    out["refutation_complete"] = res.refutation.complete;
                } else {
                    out["chi"] = "UNCOLORABLE";
                }
                return out;
            });
            j["instance"] = chr_spec;
            emit(j, csv);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CriticalFinding& e) {
        std::cerr << "CRITICAL: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
