#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/berge.hpp"
#include "rainbow/classification.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/rainbow.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/switching.hpp"

using nlohmann::json;
using namespace rainbow;

namespace {

uint64_t default_seed() {
    const char* env = std::getenv("RAINBOW_SEED");
    if (!env || !*env) return 1;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end) throw std::invalid_argument("RAINBOW_SEED must be an integer");
    return static_cast<uint64_t>(v);
}

std::string frac_text(const Frac& f) {
    std::ostringstream out;
    out << f.num << '/' << f.den;
    return out.str();
}

struct ParamFlags {
    std::string nu = "1/20", tau = "1/5", gamma = "1/20", eps = "1/10", alpha = "1/10",
                eta = "1/10";

    void attach(CLI::App* cmd) {
        cmd->add_option("--nu", nu, "robust-neighbourhood threshold fraction");
        cmd->add_option("--tau", tau, "expander set-size fraction");
        cmd->add_option("--gamma", gamma, "closeness threshold fraction");
        cmd->add_option("--eps", eps, "two-clique degree slack fraction");
        cmd->add_option("--alpha", alpha, "biclique imbalance fraction");
        cmd->add_option("--eta", eta, "reduced-graph degree slack fraction");
    }

    Params params() const {
        Params p;
        p.nu = Frac::parse(nu);
        p.tau = Frac::parse(tau);
        p.gamma = Frac::parse(gamma);
        p.eps = Frac::parse(eps);
        p.alpha = Frac::parse(alpha);
        p.eta = Frac::parse(eta);
        p.validate();
        return p;
    }
};

long long quantile(std::vector<long long> v, double q) {
    if (v.empty()) return -1;
    std::sort(v.begin(), v.end());
    size_t idx = static_cast<size_t>(q * (v.size() - 1));
    return v[idx];
}

// ---------------------------------------------------------------- generate

int run_generate(const std::string& family, int n, int k, const std::string& gamma,
                 const std::string& p, int imbalance, uint64_t seed,
                 const std::string& scheme, const std::string& mu, const std::string& out) {
    auto fam = family_from_string(family);
    if (!fam) throw std::invalid_argument("unknown family: " + family);
    GenSpec spec;
    spec.family = *fam;
    spec.n = n;
    spec.k = k;
    spec.gamma = Frac::parse(gamma);
    spec.p = Frac::parse(p);
    spec.imbalance = imbalance;
    spec.seed = seed;

    json report;
    report["family"] = family;
    report["n"] = n;
    report["seed"] = seed;

    Instance inst = realize(spec);
    Colouring col;
    if (inst.colouring) {
        col = *inst.colouring;
        if (*fam == Family::Counterexample) {
            Counterexample ce = gen_counterexample(n, k);
            report["k"] = k;
            report["max_class_size"] = ce.report.max_class_size;
            report["class_size_bound"] = ce.report.class_size_bound;
            report["forced_inside_edges"] = ce.report.forced_inside_edges;
            report["side_a"] = ce.report.side_a.size();
            report["side_b"] = ce.report.side_b.size();
        }
    } else {
        ColourScheme cs;
        if (scheme == "rainbow") cs = ColourScheme::Rainbow;
        else if (scheme == "proper") cs = ColourScheme::Proper;
        else if (scheme == "bounded") cs = ColourScheme::Bounded;
        else throw std::invalid_argument("unknown scheme: " + scheme);
        col = gen_colouring(inst.g, cs, Frac::parse(mu), derive_seed(seed, 7));
        report["scheme"] = scheme;
        if (cs == ColourScheme::Bounded) report["mu"] = mu;
    }
    report["vertices"] = inst.g.n();
    report["edges"] = inst.g.m();
    report["colours"] = col.num_colours();

    std::string text = graph_to_string(inst.g, col);
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file(out, text);
        report["out"] = out;
        std::cout << report.dump(2) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- classify

int run_classify(const std::string& input, const ParamFlags& pf, const std::string& mode,
                 uint64_t seed, int restarts, long long trials) {
    auto [g, c] = load_graph(input);
    (void)c;
    Params p = pf.params();

    auto run_closeness = [&](ClosenessTarget target, uint64_t s) {
        if (mode == "exact") return closeness_exact(g, target);
        if (mode == "local") return closeness_local(g, target, s, restarts);
        return closeness(g, target, s, restarts);
    };

    Classification out;
    ClosenessResult tc = run_closeness(ClosenessTarget::TwoCliques, derive_seed(seed, 1));
    ClosenessResult bip = run_closeness(ClosenessTarget::Bipartite, derive_seed(seed, 2));
    if (tc.gamma_best <= p.gamma) {
        out.tag = StructureTag::CloseToTwoCliques;
        out.partition = tc.witness;
        out.gamma_best = tc.gamma_best;
    } else if (bip.gamma_best <= p.gamma) {
        out.tag = StructureTag::CloseToBipartite;
        out.partition = bip.witness;
        out.gamma_best = bip.gamma_best;
    } else {
        ExpanderReport rep =
            robust_expander_sampled(g, p.nu, p.tau, trials, derive_seed(seed, 3));
        out.tag = rep.expands ? StructureTag::RobustExpander : StructureTag::Unclassified;
        out.certificate = rep;
    }

    std::cout << "tag=" << to_string(out.tag) << '\n';
    std::cout << "witness=";
    if (out.partition) {
        for (size_t i = 0; i < out.partition->size(); ++i)
            std::cout << (i ? " " : "") << (*out.partition)[i];
    } else {
        std::cout << '-';
    }
    std::cout << '\n';
    if (out.gamma_best)
        std::cout << "gamma_best=" << frac_text(*out.gamma_best) << " (~"
                  << out.gamma_best->value() << ")\n";
    else
        std::cout << "gamma_best=-\n";
    if (out.certificate) {
        std::cout << "expander_sets_tested=" << out.certificate->sets_tested << '\n';
        std::cout << "expander_violation=";
        if (out.certificate->violation) {
            for (size_t i = 0; i < out.certificate->violation->size(); ++i)
                std::cout << (i ? " " : "") << (*out.certificate->violation)[i];
        } else {
            std::cout << '-';
        }
        std::cout << '\n';
    }
    return 0;
}

// -------------------------------------------------------------------- find

int run_find(const std::string& input, const std::string& mu, const ParamFlags& pf,
             long long max_steps, int restarts, uint64_t seed, bool report_beta,
             long long max_nodes, const std::string& out, bool allow_subdirac) {
    auto [g, c] = load_graph(input);
    json report;
    if (!mu.empty()) {
        c = gen_colouring(g, ColourScheme::Bounded, Frac::parse(mu), derive_seed(seed, 9));
        report["mu"] = mu;
    }
    Params p = pf.params();
    SearchConfig cfg;
    cfg.max_steps = max_steps;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.beta_report = report_beta;
    cfg.ham_budget.max_nodes = max_nodes;

    FindReport rep;
    std::optional<DirectedHamCycle> res = find_rainbow_hc(g, c, p, cfg, &rep, allow_subdirac);

    report["found"] = rep.found;
    report["tag"] = to_string(rep.tag);
    report["seed"] = seed;
    report["params"] = {{"nu", pf.nu},   {"tau", pf.tau},     {"gamma", pf.gamma},
                        {"eps", pf.eps}, {"alpha", pf.alpha}, {"eta", pf.eta}};
    report["steps"] = rep.stats.steps;
    report["restarts_used"] = rep.stats.restarts_used;
    report["start_nodes"] = rep.stats.start_nodes;
    report["attempts"] = json::array();
    for (const RouteNote& a : rep.attempts)
        report["attempts"].push_back({{"route", a.route}, {"note", a.note}});
    if (report_beta) {
        const auto& ac = rep.stats.admissible_counts;
        report["admissible"] = {{"samples", ac.size()},
                                {"min", quantile(ac, 0.0)},
                                {"p50", quantile(ac, 0.5)},
                                {"max", quantile(ac, 1.0)}};
        const auto& cc = rep.stats.conflict_counts;
        report["conflicts"] = {{"samples", cc.size()},
                               {"first", cc.empty() ? -1 : cc.front()},
                               {"last", cc.empty() ? -1 : cc.back()}};
    }
    if (res) {
        report["cycle"] = cycle_to_string(*res);
        if (!out.empty()) {
            save_cycle(out, *res);
            report["out"] = out;
        }
    }
    std::cout << report.dump(2) << '\n';
    return res ? 0 : 1;
}

// ------------------------------------------------------------------ verify

int run_verify(const std::string& input, const std::string& cycle,
               const std::string& protect) {
    auto [g, c] = load_graph(input);
    DirectedHamCycle h = load_cycle(cycle, g.n());
    ProtectedSet z;
    if (!protect.empty()) z = load_edge_set(protect, g.n());

    if (!validate_ham_cycle(g, h, ProtectedSet())) {
        std::cout << "FAIL cycle\n";
        return 1;
    }
    std::vector<Edge> edges = h.edge_set();
    bool coloured = true;
    for (const Edge& e : edges)
        if (!c.has(e.u, e.v)) coloured = false;
    if (!coloured || !is_rainbow(c, edges)) {
        std::cout << "FAIL rainbow\n";
        return 1;
    }
    for (const Edge& e : z.edges())
        if (!h.has_undirected(e.u, e.v)) {
            std::cout << "FAIL protected-edges\n";
            return 1;
        }
    std::cout << "OK\n";
    return 0;
}

// -------------------------------------------------------------- switchings

int run_switchings(const std::string& input, const std::string& cycle, int tail,
                   const std::string& protect, bool list) {
    auto [g, c] = load_graph(input);
    (void)c;
    DirectedHamCycle h = load_cycle(cycle, g.n());
    ProtectedSet z;
    if (!protect.empty()) z = load_edge_set(protect, g.n());
    std::vector<SwitchSpec> pool = enumerate_admissible(g, h, tail, z);
    std::cout << pool.size() << '\n';
    if (list)
        for (const SwitchSpec& s : pool)
            std::cout << s.e_prime.first << ' ' << s.e_prime.second << ' ' << s.kind << '\n';
    return 0;
}

// ---------------------------------------------------------------- hamilton

int run_hamilton(const std::string& input, const std::string& require, long long max_nodes,
                 double time_limit, uint64_t seed, const std::string& out) {
    auto [g, c] = load_graph(input);
    (void)c;
    ProtectedSet z;
    if (!require.empty()) z = load_edge_set(require, g.n());
    SearchBudget budget;
    budget.max_nodes = max_nodes;
    budget.time_limit_s = time_limit;
    HamResult res = find_ham_cycle(g, z, budget, seed);
    if (res.outcome == HamOutcome::Found) {
        std::cout << cycle_to_string(*res.cycle);
        if (!out.empty()) save_cycle(out, *res.cycle);
        return 0;
    }
    std::cout << (res.outcome == HamOutcome::Exhausted ? "NONE\n" : "BUDGET\n");
    return 1;
}

// ------------------------------------------------------------------- berge

int run_berge(const std::string& input, uint64_t seed, long long max_steps, int restarts,
              long long max_nodes) {
    Hypergraph h = load_hypergraph(input);
    SearchConfig cfg;
    cfg.max_steps = max_steps;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.ham_budget.max_nodes = max_nodes;
    std::optional<BergeCycle> b = berge_hamilton(h, cfg);
    if (!b) {
        std::cout << "NONE\n";
        return 1;
    }
    std::cout << berge_to_string(*b) << '\n';
    return 0;
}

// -------------------------------------------------------------- experiment

struct ExperimentRow {
    GenSpec spec;
    std::string mu;   // "-" for families with an intrinsic colouring
    uint64_t seed = 1;
};

struct RowResult {
    std::string status = "error";   // found | none | error
    std::string tag = "-";
    std::string note;
    long long steps = 0;
    int restarts_used = 0;
    long long adm_min = -1, adm_p50 = -1;
    long long wall_ms = 0;
};

std::string csv_safe(std::string s) {
    for (char& ch : s)
        if (ch == ',' || ch == '\n') ch = ';';
    return s;
}

RowResult compute_row(const ExperimentRow& row, const Params& p, const SearchConfig& base) {
    RowResult out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        GenSpec spec = row.spec;
        spec.seed = row.seed;
        Instance inst = realize(spec);
        Colouring col = inst.colouring
                            ? *inst.colouring
                            : gen_colouring(inst.g, ColourScheme::Bounded,
                                            Frac::parse(row.mu), derive_seed(row.seed, 1));
        SearchConfig cfg = base;
        cfg.seed = derive_seed(row.seed, 2);
        cfg.beta_report = true;
        FindReport rep;
        std::optional<DirectedHamCycle> res =
            find_rainbow_hc(inst.g, col, p, cfg, &rep, /*allow_subdirac=*/false);
        out.tag = to_string(rep.tag);
        out.steps = rep.stats.steps;
        out.restarts_used = rep.stats.restarts_used;
        out.adm_min = quantile(rep.stats.admissible_counts, 0.0);
        out.adm_p50 = quantile(rep.stats.admissible_counts, 0.5);
        if (res) {
            if (!verify(inst.g, col, *res, ProtectedSet()))
                throw std::logic_error("row result failed verification");
            out.status = "found";
        } else {
            out.status = "none";
        }
    } catch (const std::exception& e) {
        out.status = "error";
        out.note = csv_safe(e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    out.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return out;
}

int run_experiment(const std::string& plan_path, const std::string& out_dir, int threads) {
    json plan = json::parse(read_file(plan_path));
    if (!plan.contains("families") || plan["families"].empty())
        throw std::invalid_argument("plan lists no families");
    std::vector<std::string> mu_grid;
    for (const auto& m : plan.value("mu_grid", json::array()))
        mu_grid.push_back(m.get<std::string>());
    uint64_t seed_start = 1;
    int seed_count = 0;
    if (plan.contains("seeds")) {
        seed_start = plan["seeds"].value("start", 1);
        seed_count = plan["seeds"].value("count", 0);
    }
    if (seed_count <= 0) throw std::invalid_argument("plan needs seeds.count >= 1");

    SearchConfig base;
    if (plan.contains("budgets")) {
        base.max_steps = plan["budgets"].value("max_steps", base.max_steps);
        base.restarts = plan["budgets"].value("restarts", base.restarts);
        base.ham_budget.max_nodes =
            plan["budgets"].value("max_nodes", base.ham_budget.max_nodes);
    }
    ParamFlags pf;
    if (plan.contains("params")) {
        const auto& pp = plan["params"];
        pf.nu = pp.value("nu", pf.nu);
        pf.tau = pp.value("tau", pf.tau);
        pf.gamma = pp.value("gamma", pf.gamma);
        pf.eps = pp.value("eps", pf.eps);
        pf.alpha = pp.value("alpha", pf.alpha);
        pf.eta = pp.value("eta", pf.eta);
    }
    Params p = pf.params();

    std::vector<ExperimentRow> rows;
    for (const auto& f : plan["families"]) {
        GenSpec spec;
        auto fam = family_from_string(f.at("family").get<std::string>());
        if (!fam) throw std::invalid_argument("plan names an unknown family");
        spec.family = *fam;
        spec.n = f.at("n").get<int>();
        if (f.contains("gamma")) spec.gamma = Frac::parse(f["gamma"].get<std::string>());
        if (f.contains("p")) spec.p = Frac::parse(f["p"].get<std::string>());
        if (f.contains("k")) spec.k = f["k"].get<int>();
        if (f.contains("imbalance")) spec.imbalance = f["imbalance"].get<int>();
        bool intrinsic = spec.family == Family::Counterexample ||
                         spec.family == Family::LatinSquare;
        std::vector<std::string> mus = intrinsic ? std::vector<std::string>{"-"} : mu_grid;
        if (mus.empty())
            throw std::invalid_argument("plan needs a non-empty mu_grid for this family");
        for (const std::string& mu : mus)
            for (int s = 0; s < seed_count; ++s)
                rows.push_back(ExperimentRow{spec, mu, seed_start + static_cast<uint64_t>(s)});
    }

    std::vector<RowResult> results(rows.size());
    int workers = std::max(1, threads);
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            results[i] = compute_row(rows[i], p, base);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::filesystem::create_directories(out_dir);
    std::ostringstream rows_csv;
    rows_csv << "family,n,mu,seed,tag,status,steps,restarts_used,admissible_min,"
                "admissible_p50,note,wall_ms\n";
    std::map<std::string, std::pair<long long, long long>> agg;   // key -> (rows, found)
    for (size_t i = 0; i < rows.size(); ++i) {
        const ExperimentRow& r = rows[i];
        const RowResult& res = results[i];
        std::string fam = to_string(r.spec.family);
        rows_csv << fam << ',' << r.spec.n << ',' << r.mu << ',' << r.seed << ',' << res.tag
                 << ',' << res.status << ',' << res.steps << ',' << res.restarts_used << ','
                 << res.adm_min << ',' << res.adm_p50 << ',' << res.note << ',' << res.wall_ms
                 << '\n';
        auto& slot = agg[fam + "," + std::to_string(r.spec.n) + "," + r.mu];
        ++slot.first;
        if (res.status == "found") ++slot.second;
    }
    std::ostringstream summary_csv;
    summary_csv << "family,n,mu,rows,found,success_rate\n";
    for (const auto& [key, v] : agg) {
        double rate = v.first ? static_cast<double>(v.second) / v.first : 0.0;
        summary_csv << key << ',' << v.first << ',' << v.second << ',' << rate << '\n';
    }
    write_file(out_dir + "/rows.csv", rows_csv.str());
    write_file(out_dir + "/summary.csv", summary_csv.str());
    std::cout << summary_csv.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow Hamilton cycle toolkit"};
    app.require_subcommand(1);
    uint64_t seed = 0;
    bool seed_given = false;

    // generate
    auto* g_cmd = app.add_subcommand("generate", "write a seeded instance");
    std::string g_family, g_gamma = "0", g_p = "3/4", g_scheme = "rainbow", g_mu = "1/16",
                g_out;
    int g_n = 0, g_k = 2, g_imbalance = -1;
    g_cmd->add_option("--family", g_family,
                      "random_dirac | two_clique_like | bipartite_like | counterexample | "
                      "latin_square")
        ->required();
    g_cmd->add_option("--n", g_n, "vertex count (latin_square: square order, graph gets 2n)")
        ->required();
    g_cmd->add_option("--k", g_k, "counterexample regularity (even)");
    g_cmd->add_option("--gamma", g_gamma, "perturbation budget fraction");
    g_cmd->add_option("--p", g_p, "random_dirac edge probability");
    g_cmd->add_option("--imbalance", g_imbalance, "bipartite side difference (-1: parity)");
    g_cmd->add_option("--scheme", g_scheme, "rainbow | bounded | proper");
    g_cmd->add_option("--mu", g_mu, "bounded-scheme class cap fraction");
    g_cmd->add_option("--out", g_out, "output graph file (stdout when absent)");

    // classify
    auto* c_cmd = app.add_subcommand("classify", "structure tag for a graph");
    std::string c_input, c_mode = "auto";
    ParamFlags c_pf;
    int c_restarts = 8;
    long long c_trials = 2000;
    c_cmd->add_option("--input", c_input, "graph file")->required();
    c_pf.attach(c_cmd);
    c_cmd->add_option("--mode", c_mode, "auto | exact | local");
    c_cmd->add_option("--restarts", c_restarts, "local-search restarts");
    c_cmd->add_option("--trials", c_trials, "sampled expander trials");

    // find
    auto* f_cmd = app.add_subcommand("find", "search for a rainbow Hamilton cycle");
    std::string f_input, f_mu, f_out;
    ParamFlags f_pf;
    long long f_steps = 100000, f_nodes = 10000000;
    int f_restarts = 20;
    bool f_beta = false, f_subdirac = false;
    f_cmd->add_option("--input", f_input, "graph file")->required();
    f_cmd->add_option("--mu", f_mu, "recolour with a bounded colouring of this fraction");
    f_pf.attach(f_cmd);
    f_cmd->add_option("--max-steps", f_steps, "resampling steps per restart");
    f_cmd->add_option("--restarts", f_restarts, "restart count");
    f_cmd->add_option("--max-nodes", f_nodes, "backtracker node budget per start");
    f_cmd->add_flag("--report-beta", f_beta, "record admissible-count statistics");
    f_cmd->add_flag("--allow-subdirac", f_subdirac, "search below the degree bound");
    f_cmd->add_option("--out", f_out, "cycle output file");

    // verify
    auto* v_cmd = app.add_subcommand("verify", "check a cycle file");
    std::string v_input, v_cycle, v_protect;
    v_cmd->add_option("--input", v_input, "graph file")->required();
    v_cmd->add_option("--cycle", v_cycle, "cycle file")->required();
    v_cmd->add_option("--protect", v_protect, "edge-set file that must lie on the cycle");

    // switchings
    auto* s_cmd = app.add_subcommand("switchings", "enumerate admissible switchings");
    std::string s_input, s_cycle, s_protect;
    int s_tail = 0;
    bool s_list = false;
    s_cmd->add_option("--input", s_input, "graph file")->required();
    s_cmd->add_option("--cycle", s_cycle, "cycle file")->required();
    s_cmd->add_option("--edge", s_tail, "tail vertex of the replaced cycle edge")->required();
    s_cmd->add_option("--protect", s_protect, "edge-set file");
    s_cmd->add_flag("--list", s_list, "print each switching");

    // hamilton
    auto* h_cmd = app.add_subcommand("hamilton", "plain Hamilton cycle search");
    std::string h_input, h_require, h_out;
    long long h_nodes = 10000000;
    double h_time = 0.0;
    h_cmd->add_option("--input", h_input, "graph file")->required();
    h_cmd->add_option("--require", h_require, "edge-set file the cycle must contain");
    h_cmd->add_option("--max-nodes", h_nodes, "node budget");
    h_cmd->add_option("--time-limit", h_time, "seconds (0: none)");
    h_cmd->add_option("--out", h_out, "cycle output file");

    // berge
    auto* b_cmd = app.add_subcommand("berge", "Berge Hamilton cycle via the shadow graph");
    std::string b_input;
    long long b_steps = 100000, b_nodes = 10000000;
    int b_restarts = 20;
    b_cmd->add_option("--input", b_input, "hypergraph file")->required();
    b_cmd->add_option("--max-steps", b_steps, "resampling steps per restart");
    b_cmd->add_option("--restarts", b_restarts, "restart count");
    b_cmd->add_option("--max-nodes", b_nodes, "backtracker node budget");

    // experiment
    auto* e_cmd = app.add_subcommand("experiment", "batch runs from a JSON plan");
    std::string e_plan, e_out = "experiment-out";
    int e_threads = 1;
    e_cmd->add_option("--plan", e_plan, "plan JSON file")->required();
    e_cmd->add_option("--out", e_out, "output directory");
    e_cmd->add_option("--threads", e_threads, "worker threads");

    app.add_option("--seed", seed, "seed (default: RAINBOW_SEED or 1)")
        ->each([&](const std::string&) { seed_given = true; });
    for (CLI::App* sub : app.get_subcommands(std::function<bool(CLI::App*)>{}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!seed_given) seed = default_seed();
        if (g_cmd->parsed())
            return run_generate(g_family, g_n, g_k, g_gamma, g_p, g_imbalance, seed, g_scheme,
                                g_mu, g_out);
        if (c_cmd->parsed())
            return run_classify(c_input, c_pf, c_mode, seed, c_restarts, c_trials);
        if (f_cmd->parsed())
            return run_find(f_input, f_mu, f_pf, f_steps, f_restarts, seed, f_beta, f_nodes,
                            f_out, f_subdirac);
        if (v_cmd->parsed()) return run_verify(v_input, v_cycle, v_protect);
        if (s_cmd->parsed()) return run_switchings(s_input, s_cycle, s_tail, s_protect, s_list);
        if (h_cmd->parsed())
            return run_hamilton(h_input, h_require, h_nodes, h_time, seed, h_out);
        if (b_cmd->parsed()) return run_berge(b_input, seed, b_steps, b_restarts, b_nodes);
        if (e_cmd->parsed()) return run_experiment(e_plan, e_out, e_threads);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
