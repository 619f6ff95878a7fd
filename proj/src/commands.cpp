#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "gcn/analysis.hpp"
#include "gcn/arranger.hpp"
#include "gcn/ballsbins.hpp"
#include "gcn/boxgame.hpp"
#include "gcn/estimate.hpp"
#include "gcn/exact.hpp"
#include "gcn/game.hpp"
#include "gcn/monitors.hpp"
#include "gcn/rng.hpp"
#include "gcn/strategies.hpp"

namespace gcn::detail {

namespace {

// Input files named in the config; a missing one is a config error.
std::string read_input_file(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw ConfigError("input file not found: " + path);
    return read_text_file(path);
}

struct GraphSource {
    Graph graph;
    std::string id;
    std::optional<double> p;
    std::vector<Vertex> partner;
};

// One of: graph=<path>, bipartite=<n>, gnp="n,p", or n and p.
GraphSource graph_from_params(const ExperimentConfig& cfg) {
    const auto& P = cfg.params;
    if (P.contains("graph")) {
        const auto path = param_string(P, "graph");
        return {parse_graph(read_input_file(path)), "file:" + path, std::nullopt, {}};
    }
    if (P.contains("bipartite")) {
        const int n = param_int(P, "bipartite");
        if (n < 1) throw ConfigError("bipartite: n must be >= 1");
        auto b = bipartite_minus_matching(n);
        return {std::move(b.graph), "bipartite:n=" + std::to_string(n), std::nullopt, std::move(b.partner)};
    }
    int n = 0;
    double p = 0;
    if (P.contains("gnp")) {
        const auto s = param_string(P, "gnp");
        const auto comma = s.find(',');
        if (comma == std::string::npos) throw ConfigError("gnp: expected n,p");
        nlohmann::json tmp = {{"n", s.substr(0, comma)}, {"p", s.substr(comma + 1)}};
        n = param_int(tmp, "n");
        p = param_double(tmp, "p");
    } else if (P.contains("n") && P.contains("p")) {
        n = param_int(P, "n");
        p = param_double(P, "p");
    } else {
        throw ConfigError("no graph given: use gnp, n and p, bipartite, or graph");
    }
    const std::uint64_t gseed = mix(cfg.seed, 0);
    std::ostringstream id;
    id << "gnp:n=" << n << ",p=" << p << ",seed=" << gseed;
    return {gen_gnp(n, p, gseed), id.str(), p, {}};
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void emit(const ExperimentConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.params.contains("out"))
        write_text_file(param_string(cfg.params, "out"), text);
    else
        out << text;
}

double monitor_alpha(const ExperimentConfig& cfg, int n, double p, int k) {
    if (cfg.params.contains("alpha")) return param_double(cfg.params, "alpha");
    return k * log_b_np(n, p) / n;
}

}  // namespace

int cmd_gen(const ExperimentConfig& cfg, std::ostream& out, std::ostream&) {
    auto src = graph_from_params(cfg);
    emit(cfg, out, serialize_graph(src.graph) + "\n");
    return kExitOk;
}

int cmd_play(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    auto src = graph_from_params(cfg);
    const int k = param_int(cfg.params, "k");
    if (k < 1) throw ConfigError("k must be >= 1");
    const auto maker_desc =
        resolve_maker(param_string(cfg.params, "maker", "paper:auto"), src.graph.n(), src.p.value_or(0), k);
    const auto breaker_desc = param_string(cfg.params, "breaker", "minavail");
    if (breaker_desc == "matching" && src.partner.empty())
        throw ConfigError("the matching breaker needs a bipartite graph");
    const auto maker = make_strategy(maker_desc);
    const auto breaker = make_strategy(breaker_desc, src.partner.empty() ? nullptr : &src.partner);
    PlayOptions opt;
    opt.graph_id = src.id;
    opt.max_moves = param_int(cfg.params, "max_moves", -1);
    const std::uint64_t game_seed = mix(mix(cfg.seed, 0), static_cast<std::uint64_t>(k));
    const auto trace = play_game(src.graph, k, *maker, *breaker, game_seed, opt);

    std::ostringstream jsonl;
    write_trace_jsonl(jsonl, trace);
    emit(cfg, out, jsonl.str());
    err << "outcome " << to_string(trace.outcome) << " after " << trace.moves.size() << " moves";
    if (trace.outcome == Outcome::BreakerWon) err << " (v0 = " << trace.witness << ")";
    err << '\n';

    const bool want_monitors = cfg.params.contains("monitors");
    const bool want_decomposition = cfg.params.contains("decompose");
    if ((want_monitors || want_decomposition) && !src.p)
        throw ConfigError("monitors and decomposition need a G(n,p) graph");
    if (want_monitors) {
        const double alpha = monitor_alpha(cfg, src.graph.n(), *src.p, k);
        const auto rep = trace_monitors(src.graph, trace, *src.p, alpha);
        write_text_file(param_string(cfg.params, "monitors"), rep.to_json().dump(2) + "\n");
    }
    if (want_decomposition && trace.outcome == Outcome::BreakerWon) {
        const double alpha = monitor_alpha(cfg, src.graph.n(), *src.p, k);
        DecompositionOptions dopt;
        if (cfg.params.contains("q_override")) dopt.q_override = param_int(cfg.params, "q_override");
        const auto rep = endgame_decomposition(src.graph, trace, *src.p, alpha, dopt);
        write_text_file(param_string(cfg.params, "decompose"), rep.to_json().dump(2) + "\n");
    }
    return trace.outcome == Outcome::Aborted ? kExitRuntime : kExitOk;
}

int cmd_solve(const ExperimentConfig& cfg, std::ostream& out, std::ostream&) {
    auto src = graph_from_params(cfg);
    const int k = param_int(cfg.params, "k");
    const auto res = solve_exact(src.graph, k, param_int(cfg.params, "budget", 12));
    out << (res.winner == Winner::Maker ? "MakerWon" : "BreakerWon") << " states=" << res.states << '\n';
    return kExitOk;
}

int cmd_boxgame(const ExperimentConfig& cfg, std::ostream& out, std::ostream&) {
    BoxInstance inst;
    inst.sizes = param_int64_list(cfg.params, "sizes");
    inst.q = param_int(cfg.params, "q", 1);
    inst.d = param_int(cfg.params, "d", 0);
    inst.z = param_int(cfg.params, "z", 1);
    try {
        validate(inst);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    BoxBreakerPolicy policy;
    policy.elimination = parse_elimination_policy(param_string(cfg.params, "breaker", "smallest"));
    policy.claim = parse_claim_policy(param_string(cfg.params, "claim", "largest"));
    policy.steal = parse_steal_schedule(param_string(cfg.params, "steal", "maximal"));
    const auto slack = param_string(cfg.params, "slack", "largest");
    if (slack != "largest" && slack != "smallest") throw ConfigError("slack must be largest or smallest");
    policy.slack = slack == "largest" ? SlackChoice::Largest : SlackChoice::Smallest;

    if (param_bool(cfg.params, "check_criterion", false)) {
        const auto c = criterion_holds(inst.sizes, inst.q, inst.d, inst.z);
        out << "criterion " << (c.holds ? "holds" : "fails");
        if (!c.holds) out << " at m=" << c.witness_m << " (f=" << f_bound(c.witness_m, inst.q, inst.d, inst.z) << ")";
        out << '\n';
    }
    const auto res = play_boxgame(inst, policy, cfg.seed);
    out << "winner " << (res.winner == Winner::Maker ? "Maker" : "Breaker");
    if (res.winner == Winner::Breaker) out << " (emptied set " << res.emptied_set << ")";
    out << " events=" << res.events.size() << '\n';
    if (param_bool(cfg.params, "exact", false)) {
        const auto ex = solve_boxgame_exact(inst, param_int(cfg.params, "budget", 18));
        out << "exact " << (ex.winner == Winner::Maker ? "Maker" : "Breaker") << " states=" << ex.states << '\n';
    }
    return kExitOk;
}

int cmd_ballsbins(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& P = cfg.params;
    const int k = param_int(P, "k");
    const int N = param_int(P, "N");
    const int a = param_int(P, "a", 0);
    const long balls = param_int(P, "balls", 1000);
    const auto kind = param_string(P, "adversary", "random");
    const double prob = param_double(P, "removal_prob", 0.01);
    const int max_removals = param_int(P, "max_removals", std::max(0, k / 10));
    std::unique_ptr<BinsAdversary> adv;
    if (kind == "random")
        adv = make_random_adversary(prob, max_removals);
    else if (kind == "stacker")
        adv = make_stacker_adversary(a > 0 ? a : 4);
    else if (kind == "just-above")
        adv = make_just_above_adversary(a > 0 ? a : 4);
    else if (kind == "removal-heavy")
        adv = make_removal_heavy_adversary(param_double(P, "removal_prob", 0.2), max_removals, a > 0 ? a : 4);
    else if (kind == "leveler")
        adv = make_leveler_adversary();
    else if (kind == "custom-script")
        adv = make_scripted_adversary(read_input_file(param_string(P, "script")));
    else
        throw ConfigError("unknown adversary '" + kind + "'");
    const auto steal = param_string(P, "steal", "fixed");
    if (steal != "fixed" && steal != "adversarial") throw ConfigError("steal must be fixed or adversarial");
    if (k < 1 || N < 2) throw ConfigError("ballsbins needs k >= 1 and N >= 2");

    const auto trace =
        play_ballsbins(k, N, *adv, balls, cfg.seed, steal == "fixed" ? StealMode::Fixed : StealMode::Adversarial);
    std::ostringstream csv;
    csv << "t,player,bin,load_after,stolen,removed_bins\n";
    auto removed_at = [&](long t) {
        std::string s;
        for (const auto& r : trace.removals)
            if (r.time == t) s += (s.empty() ? "" : ";") + std::to_string(r.bin);
        return s;
    };
    if (auto r0 = removed_at(0); !r0.empty()) csv << "0,-,,,," << r0 << '\n';
    for (const auto& b : trace.balls)
        csv << b.t << ',' << (b.by_m ? "M" : "B") << ',' << b.bin << ',' << b.load_after << ',' << (b.stolen ? 1 : 0)
            << ',' << removed_at(b.t) << '\n';
    emit(cfg, out, csv.str());

    const int final_level = trace.level_at.empty() ? 0 : trace.level_at.back();
    err << "balls " << trace.balls.size() << ", removals " << trace.removals.size() << ", final level "
        << final_level << (trace.all_removed ? " (all bins removed)" : "") << '\n';
    if (a >= 2) {
        const auto v = check_level_loads(trace, a);
        err << "C(l) bound with a=" << a << ": " << v.size() << " violation(s)\n";
        for (const auto& x : v) err << "  l=" << x.level << " C=" << x.c << " bound=" << fmt(x.bound) << '\n';
    }
    return kExitOk;
}

int cmd_arrange(const ExperimentConfig& cfg, std::ostream& out, std::ostream&) {
    const auto path = param_string(cfg.params, "input");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_input_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    ArrangementInput input;
    try {
        input.U = doc.at("U").get<std::vector<Vertex>>();
        input.avail = doc.at("avail").get<std::vector<std::vector<Color>>>();
        input.k = doc.value("k", 0);
        input.q = doc.value("q", 1);
        input.color_order = doc.value("color_order", std::vector<Color>{});
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (cfg.params.contains("q")) input.q = param_int(cfg.params, "q");
    if (input.U.size() != input.avail.size()) throw ConfigError(path + ": U and avail differ in length");
    if (input.q < 1) throw ConfigError("q must be >= 1");

    const auto res = color_arranging(input);
    const auto rep = verify_arrangement(input, res);
    nlohmann::ordered_json j;
    j["q"] = input.q;
    j["S"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < input.U.size(); ++i) j["S"].push_back({{"v", input.U[i]}, {"S", res.S[i]}});
    j["residual"] = res.residual;
    j["max_s"] = res.max_s;
    j["residual_ok"] = rep.residual_ok;
    j["size_ok"] = rep.size_ok;
    j["oversized"] = rep.oversized;
    j["overfull"] = rep.overfull;
    if (cfg.params.contains("h") && cfg.params.contains("xi")) {
        const auto c = wk_cascade(input, res, param_double(cfg.params, "h"), param_double(cfg.params, "xi"));
        j["cascade"] = {{"L", c.L}, {"c", c.c}, {"K_floor", c.K_floor}, {"K_ceil", c.K_ceil}, {"W", c.sizes}};
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_formulas(const ExperimentConfig& cfg, std::ostream& out, std::ostream&) {
    const double alpha = param_double(cfg.params, "alpha");
    if (!(alpha > 1)) throw ConfigError("alpha must be > 1");
    const auto C = constants(alpha);
    out << "alpha " << fmt(alpha) << "\nxi " << fmt(C.xi) << "\nN " << C.N << "\nJ " << C.J() << '\n';
    out << "h L c\n";
    for (const auto& ph : C.phases) out << fmt(ph.h) << ' ' << fmt(ph.L) << ' ' << fmt(ph.c) << '\n';
    if (cfg.params.contains("n")) {
        const int n = param_int(cfg.params, "n");
        const double p = param_double(cfg.params, "p");
        std::vector<double> hs;
        if (cfg.params.contains("h"))
            hs.push_back(param_double(cfg.params, "h"));
        else
            for (const auto& ph : C.phases) hs.push_back(ph.h);
        const auto first = rate_functions(n, p, alpha, hs.front());
        out << "n " << n << "\np " << fmt(p) << "\nb " << fmt(first.b) << "\nlog_b_np " << fmt(first.log_b_np)
            << "\nk_real " << fmt(first.k_real) << "\nk " << first.k << "\nn/log_b_np " << fmt(n / first.log_b_np)
            << "\nn/(2 log_b_np) " << fmt(n / (2 * first.log_b_np)) << '\n';
        out << "h beta gamma q\n";
        for (double h : hs) {
            const auto r = rate_functions(n, p, alpha, h);
            out << fmt(h) << ' ' << fmt(r.beta) << ' ' << fmt(r.gamma) << ' ' << fmt(r.q) << '\n';
        }
    }
    return kExitOk;
}

int cmd_estimate(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    EstimateConfig ec;
    ec.n = param_int(cfg.params, "n");
    ec.p = param_double(cfg.params, "p");
    ec.maker = param_string(cfg.params, "maker", ec.maker);
    ec.breakers = param_string_list(cfg.params, "breakers", ec.breakers);
    ec.playouts = param_int(cfg.params, "playouts", ec.playouts);
    ec.threshold = param_double(cfg.params, "threshold", ec.threshold);
    if (cfg.params.contains("grid")) ec.grid = param_int_list(cfg.params, "grid");
    ec.seed = cfg.seed;
    ec.workers = cfg.workers;
    if (ec.n < 1 || ec.playouts < 1) throw ConfigError("estimate needs n >= 1 and playouts >= 1");

    const auto t0 = std::chrono::steady_clock::now();
    const auto res = estimate_chi_g(ec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ostringstream csv;
    write_cells_csv(csv, res.cells);
    const auto dir = run_directory(cfg);
    write_text_file(dir / "records.csv", csv.str());
    nlohmann::json meta = {{"config", cfg.to_json()},
                           {"hash", config_hash(cfg)},
                           {"k_star", res.k_star ? nlohmann::json(*res.k_star) : nlohmann::json(nullptr)},
                           {"anchor_game", res.anchor_game},
                           {"anchor_chromatic", res.anchor_chromatic},
                           {"monotonicity_violations", res.monotonicity.size()},
                           {"wall_seconds", secs}};
    write_text_file(dir / "meta.json", meta.dump(2) + "\n");

    out << csv.str();
    out << "k* = " << (res.k_star ? std::to_string(*res.k_star) : "none") << "  (n/log_b np = " << fmt(res.anchor_game)
        << ", n/(2 log_b np) = " << fmt(res.anchor_chromatic) << ")\n";
    for (const auto& v : res.monotonicity)
        err << "monotonicity: " << v.breaker << " k=" << v.k_low << " beats k=" << v.k_high << '\n';
    err << "wrote " << (dir / "records.csv").string() << '\n';
    return kExitOk;
}

}  // namespace gcn::detail
