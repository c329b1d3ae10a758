#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmstar/classify.hpp"
#include "kmstar/irregular.hpp"
#include "kmstar/printing.hpp"
#include "kmstar/root_lattice.hpp"
#include "kmstar/weyl.hpp"

using json = nlohmann::json;
using namespace kmstar;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIllegal = 2;
constexpr int kExitNotRealizable = 3;

int worker_default() {
    if (const char* env = std::getenv("KMSTAR_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

bool parse_parts_range(const std::string& s, int& lo, int& hi) {
    if (s.empty()) return true;
    size_t comma = s.find(',');
    try {
        if (comma == std::string::npos) {
            lo = hi = std::stoi(s);
        } else {
            lo = std::stoi(s.substr(0, comma));
            hi = std::stoi(s.substr(comma + 1));
        }
    } catch (...) {
        return false;
    }
    return lo >= 0 && hi >= 0;
}

// Accepts the compact string form or the bracketed list form (tuple of
// partitions, or a lattice vector which is converted back to a tuple).
Tuple parse_input_tuple(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t[0] == '[') {
        ListForm lf = parse_list_form(t);
        if (lf.kac) return root_to_tuple(kac_from_list(lf), lf.legs.size());
        Tuple m;
        for (auto& leg : lf.legs) m.emplace_back(leg.begin(), leg.end());
        return m;
    }
    return parse_tuple(t);
}

json tuple_to_json(const Tuple& m) {
    json legs = json::array();
    for (const auto& leg : m) legs.push_back(leg);
    return legs;
}

int run_classify(long long idx_target, int ord, const std::string& parts, int workers, bool as_json) {
    if (idx_target > 0 || idx_target % 2 != 0) {
        std::cerr << "classify: the index of rigidity must be an even integer <= 0\n";
        return kExitUsage;
    }
    ClassifyOptions opt;
    opt.ord = ord;
    if (!parse_parts_range(parts, opt.parts_min, opt.parts_max)) {
        std::cerr << "classify: bad --parts range\n";
        return kExitUsage;
    }
    opt.workers = workers;
    auto res = classify(idx_target, opt);
    if (as_json) {
        json out = json::array();
        for (const auto& m : res) out.push_back(format_tuple(m));
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& m : res) std::cout << format_tuple(m) << "\n";
    }
    return 0;
}

int run_check(const std::string& spec, const std::string& mode, bool as_json) {
    Tuple m;
    try {
        m = parse_input_tuple(spec);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (mode == "sort") {
        std::cout << (as_json ? tuple_to_json(normalize_monotone(m)).dump() : format_list(normalize_monotone(m)))
                  << "\n";
        return 0;
    }
    if (mode == "strip") {
        std::cout << (as_json ? tuple_to_json(strip_zeros(m)).dump() : format_list(strip_zeros(m))) << "\n";
        return 0;
    }
    if (mode == "sp") {
        std::cout << (as_json ? tuple_to_json(m).dump() : format_list(m)) << "\n";
        return 0;
    }
    if (mode == "kac") {
        RootVector a = tuple_to_root(m);
        if (as_json) {
            json out;
            out["n"] = a.n;
            out["legs"] = a.legs;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << format_kac(a) << "\n";
        }
        return 0;
    }
    if (mode == "idx") {
        try {
            std::cout << idx(m) << "\n";
        } catch (const std::exception&) {
            std::cout << "illegal partitions\n-1\n";
            return kExitIllegal;
        }
        return 0;
    }

    Analysis a = analyze(m);
    if (a.status == AnalysisStatus::Illegal) {
        std::cout << "illegal partitions\n-1\n";
        return kExitIllegal;
    }
    if (a.status == AnalysisStatus::NotRealizable) {
        std::cout << "not realizable\n0\n";
        return kExitNotRealizable;
    }
    if (mode == "analysis") {
        if (as_json) {
            json out;
            out["pts"] = a.pts;
            out["ord"] = a.ord;
            out["idx"] = a.index;
            out["fuchs"] = a.fuchs;
            out["rod"] = a.rod;
            out["redsp"] = a.redsp;
            out["fspt"] = tuple_to_json(a.fundamental);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << format_analysis(a) << "\n";
        }
        return 0;
    }
    if (mode == "basic") {
        std::cout << (as_json ? tuple_to_json(a.fundamental).dump() : format_list(a.fundamental)) << "\n";
        return 0;
    }
    if (mode == "construct") {
        auto chain = construct_chain(m);
        if (as_json) {
            json out = json::array();
            for (const auto& t : chain) out.push_back(tuple_to_json(t));
            std::cout << out.dump() << "\n";
        } else {
            std::cout << format_chain_list(chain) << "\n";
        }
        return 0;
    }
    if (mode == "root") {
        auto tr = construct_root_trace(m);
        if (as_json) {
            json steps = json::array();
            for (const auto& s : tr.steps) steps.push_back({s.c, s.leg, s.pos});
            json out;
            out["base"] = tuple_to_json(tr.base);
            out["given"] = tuple_to_json(tr.given);
            out["steps"] = steps;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << format_root_trace(tr) << "\n";
        }
        return 0;
    }
    std::cerr << "check: unknown --out mode '" << mode << "'\n";
    return kExitUsage;
}

int run_orbit(int max_ord, bool eq, const std::string& parts, const std::string& seed, long long fundamental,
              int std_dir, bool desc, bool as_json) {
    if (fundamental <= 0) {
        return run_classify(fundamental, 0, parts, worker_default(), as_json);
    }
    OrbitOptions opt;
    opt.max_ord = max_ord;
    opt.eq_only = eq;
    if (!parse_parts_range(parts, opt.parts_min, opt.parts_max)) {
        std::cerr << "orbit: bad --parts range\n";
        return kExitUsage;
    }
    std::vector<Tuple> res;
    try {
        res = seed.empty() ? rigid_tuples(opt) : orbit_members(parse_input_tuple(seed), opt);
    } catch (const std::exception& e) {
        std::cerr << "orbit: " << e.what() << "\n";
        return kExitUsage;
    }
    if (desc) std::reverse(res.begin(), res.end());
    json jout = json::array();
    for (const auto& m : res) {
        Tuple d = display_tuple(m, std_dir);
        if (as_json)
            jout.push_back(format_tuple(d));
        else
            std::cout << format_tuple(d) << "\n";
    }
    if (as_json) std::cout << jout.dump() << "\n";
    return 0;
}

int run_refine(const std::string& spec, const std::string& style, bool as_json) {
    Tuple m;
    try {
        m = parse_input_tuple(spec);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    RefineStyle st = style == "paren" ? RefineStyle::Paren : RefineStyle::Pipe;
    std::vector<IrregularSpectrum> res;
    try {
        res = refinements(m);
    } catch (const std::exception&) {
        std::cout << "illegal partitions\n-1\n";
        return kExitIllegal;
    }
    json jout = json::array();
    for (const auto& s : res) {
        if (as_json)
            jout.push_back(render(s, st));
        else
            std::cout << render(s, st) << "\n";
    }
    if (as_json) std::cout << jout.dump() << "\n";
    return 0;
}

int run_check_irregular(const std::string& spec, bool show, bool as_json) {
    IrregularSpectrum s;
    try {
        s = parse_spectrum(spec);
    } catch (const std::exception& e) {
        std::cout << "illegal partitions\n-1\n";
        return kExitIllegal;
    }
    IrregularAnalysis a = analyze_irregular(s);
    if (a.status == AnalysisStatus::Illegal) {
        std::cout << "illegal partitions\n-1\n";
        return kExitIllegal;
    }
    if (a.status == AnalysisStatus::NotRealizable) {
        std::cout << "not realizable\n0\n";
        return kExitNotRealizable;
    }
    if (as_json) {
        json out;
        out["points"] = a.points;
        out["poincare_ranks"] = a.poincare_ranks;
        out["rank"] = a.rank;
        out["index"] = a.index;
        out["rod"] = a.rod;
        out["redsp"] = a.redsp;
        out["original"] = render(a.original, RefineStyle::Pipe);
        out["reduced"] = render(a.reduced, RefineStyle::Pipe);
        std::cout << out.dump() << "\n";
    } else if (show) {
        std::cout << format_irregular_show(a);
    } else {
        std::cout << format_irregular_analysis(a) << "\n";
    }
    return 0;
}

int run_bench(long long idx_target, const std::string& stage, bool as_json) {
    PruneFlags flags;
    try {
        flags = ablation_flags(stage);
    } catch (const std::exception& e) {
        std::cerr << "bench: " << e.what() << "\n";
        return kExitUsage;
    }
    (void)flags;
    BenchResult full = benchmark_ablation(idx_target, "none");
    BenchResult run = stage == "none" ? full : benchmark_ablation(idx_target, stage);
    if (as_json) {
        json out;
        out["idx"] = idx_target;
        out["stage"] = stage;
        out["count"] = run.count;
        out["seconds"] = run.seconds;
        out["baseline_seconds"] = full.seconds;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "count " << run.count << "\n";
        std::cout << "stage " << stage << " elapsed " << run.seconds << " s (baseline " << full.seconds << " s)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"star-shaped root system and spectral type toolkit"};
    app.require_subcommand(1);

    auto* c_classify = app.add_subcommand("classify", "fundamental tuples with a given index of rigidity");
    long long cl_idx = 0;
    int cl_ord = 0;
    std::string cl_parts;
    int cl_workers = worker_default();
    bool cl_json = false;
    c_classify->add_option("--idx", cl_idx, "index of rigidity (even, <= 0)")->required();
    c_classify->add_option("--ord", cl_ord, "order (0 = all orders)");
    c_classify->add_option("--parts", cl_parts, "leg count K or range K,L");
    c_classify->add_option("--workers,-j", cl_workers, "parallel leading-part classes");
    c_classify->add_flag("--json", cl_json, "machine-readable output");

    auto* c_check = app.add_subcommand("check", "analyze one spectral type");
    std::string ck_spec, ck_mode = "analysis";
    bool ck_json = false;
    c_check->add_option("spec", ck_spec, "tuple (string or bracketed list form)")->required();
    c_check->add_option("--out", ck_mode, "analysis|sp|kac|basic|construct|root|idx|sort|strip");
    c_check->add_flag("--json", ck_json, "machine-readable output");

    auto* c_orbit = app.add_subcommand("orbit", "reflection-orbit members up to an order");
    int ob_max = 1, ob_std = 1;
    bool ob_eq = false, ob_json = false, ob_desc = false;
    std::string ob_parts, ob_seed;
    long long ob_fund = 1;  // values <= 0 switch to the classifier
    c_orbit->add_option("--max-ord", ob_max, "largest order generated");
    c_orbit->add_flag("--eq", ob_eq, "only tuples of exactly --max-ord");
    c_orbit->add_option("--parts", ob_parts, "leg count K or range K,L");
    c_orbit->add_option("--seed", ob_seed, "orbit of this tuple (default: rigid tuples)");
    c_orbit->add_option("--fundamental", ob_fund, "list fundamental tuples of this index instead");
    c_orbit->add_option("--std", ob_std, "legs ascending (1) or descending (-1) in output");
    c_orbit->add_flag("--desc", ob_desc, "list tuples in descending order");
    c_orbit->add_flag("--json", ob_json, "machine-readable output");

    auto* c_refine = app.add_subcommand("refine", "all confluence refinements of a tuple");
    std::string rf_spec, rf_style = "pipe";
    bool rf_json = false;
    c_refine->add_option("spec", rf_spec, "tuple (string or bracketed list form)")->required();
    c_refine->add_option("--style", rf_style, "pipe|paren");
    c_refine->add_flag("--json", rf_json, "machine-readable output");

    auto* c_irr = app.add_subcommand("check-irregular", "analyze an unramified irregular spectral type");
    std::string ir_spec;
    bool ir_show = false, ir_json = false;
    c_irr->add_option("spec", ir_spec, "spectrum in pipe or grouped form")->required();
    c_irr->add_flag("--show", ir_show, "human-readable block");
    c_irr->add_flag("--json", ir_json, "machine-readable output");

    auto* c_bench = app.add_subcommand("bench", "classification timing with one pruning stage disabled");
    long long bn_idx = 0;
    std::string bn_stage = "none";
    bool bn_json = false;
    c_bench->add_option("--idx", bn_idx, "index of rigidity (even, <= 0)")->required();
    c_bench->add_option("--ablate", bn_stage,
                        "none|first-part-bound|three-point|ss-jump|ss-jump-linear|backtrack "
                        "(also 1.5, 2.1, 2.3.1, 2.3.1*, 2.6.1)");
    c_bench->add_flag("--json", bn_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*c_classify) return run_classify(cl_idx, cl_ord, cl_parts, cl_workers, cl_json);
        if (*c_check) return run_check(ck_spec, ck_mode, ck_json);
        if (*c_orbit) return run_orbit(ob_max, ob_eq, ob_parts, ob_seed, ob_fund, ob_std, ob_desc, ob_json);
        if (*c_refine) return run_refine(rf_spec, rf_style, rf_json);
        if (*c_irr) return run_check_irregular(ir_spec, ir_show, ir_json);
        if (*c_bench) return run_bench(bn_idx, bn_stage, bn_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
