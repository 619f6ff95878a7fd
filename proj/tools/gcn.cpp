// gcn: command-line front end for the coloring-game lab.
#include <CLI11.hpp>
#include <deque>
#include <iostream>
#include <map>

#include "gcn/experiment.hpp"

namespace {

struct FlagSpec {
    const char* name;
    const char* help;
    bool is_switch = false;
};

struct Bound {
    std::string key;
    CLI::Option* opt;
    std::string* value;
    bool is_switch;
};

std::string key_of(const std::string& flag) {
    std::string k = flag.substr(2);
    for (auto& ch : k)
        if (ch == '-') ch = '_';
    return k;
}

const std::map<std::string, std::vector<FlagSpec>>& command_flags() {
    static const std::vector<FlagSpec> graph{{"--gnp", "G(n,p) as n,p"},
                                             {"--n", "vertex count (with --p)"},
                                             {"--p", "edge probability"},
                                             {"--bipartite", "B_{n,n} minus a perfect matching"},
                                             {"--graph", "graph JSON file"}};
    auto with_graph = [&](std::vector<FlagSpec> extra) {
        extra.insert(extra.begin(), graph.begin(), graph.end());
        return extra;
    };
    static const std::map<std::string, std::vector<FlagSpec>> flags{
        {"gen", with_graph({{"--out", "output file (default stdout)"}})},
        {"play", with_graph({{"--k", "number of colors"},
                             {"--maker", "paper[:N=..,color=class|index,vertex=mina|index], paper:auto, greedy"},
                             {"--breaker", "random, colorhog, minavail, matching"},
                             {"--max-moves", "truncate after this many moves"},
                             {"--out", "trace JSONL file (default stdout)"},
                             {"--monitors", "write the monitor report JSON here"},
                             {"--decompose", "write the endgame decomposition JSON here"},
                             {"--alpha", "alpha for monitors (default k log_b np / n)"},
                             {"--q-override", "integer Breaker power for the decomposition"}})},
        {"solve", with_graph({{"--k", "number of colors"}, {"--budget", "vertex budget (max 15)"}})},
        {"boxgame",
         {{"--sizes", "set sizes, e.g. 3,3,3"},
          {"--q", "Breaker power"},
          {"--d", "Maker greed slack"},
          {"--z", "steal period"},
          {"--breaker", "elimination policy: smallest, dodge, random, largest"},
          {"--claim", "stolen-claim policy: largest, smallest, random"},
          {"--steal", "steal schedule: maximal, random, never"},
          {"--slack", "Maker choice within the slack: largest, smallest"},
          {"--check-criterion", "evaluate the sufficiency criterion", true},
          {"--exact", "also run the exhaustive solver", true},
          {"--budget", "element budget for --exact"}}},
        {"ballsbins",
         {{"--k", "bins"},
          {"--N", "steal period"},
          {"--a", "load cap for the C(l) check and stacking adversaries"},
          {"--adversary", "random, stacker, just-above, removal-heavy, leveler, custom-script"},
          {"--script", "script file for custom-script"},
          {"--balls", "horizon in balls"},
          {"--steal", "fixed or adversarial"},
          {"--removal-prob", "removal probability per ball"},
          {"--max-removals", "removal cap"},
          {"--out", "trace CSV file (default stdout)"}}},
        {"arrange",
         {{"--input", "arrangement JSON {U, avail, q?, k?, color_order?}"},
          {"--q", "threshold q"},
          {"--h", "phase h for the W_K cascade"},
          {"--xi", "xi for the W_K cascade"}}},
        {"formulas", {{"--n", "vertex count"}, {"--p", "edge probability"}, {"--alpha", "alpha > 1"}, {"--h", "phase h"}}},
        {"estimate",
         {{"--n", "vertex count"},
          {"--p", "edge probability"},
          {"--maker", "Maker descriptor (default paper:auto)"},
          {"--breakers", "comma-separated Breakers"},
          {"--playouts", "playouts per cell"},
          {"--threshold", "win-rate threshold for k*"},
          {"--grid", "k values (a,b,c or lo:hi:step); default binary search"}}},
        {"sweep",
         {{"--n", "vertex count"},
          {"--p", "edge probability"},
          {"--maker", "Maker descriptor (default paper:auto)"},
          {"--breakers", "comma-separated Breakers"},
          {"--k", "k values (a,b,c or lo:hi:step)"},
          {"--playouts", "playouts per cell"},
          {"--alpha", "alpha for the monitors (default per k)"},
          {"--monitors", "true or false"},
          {"--save-traces", "write every trace to traces/", true},
          {"--max-new-records", "stop after this many new records (resume later)"}}},
    };
    return flags;
}

const std::map<std::string, std::string>& command_help() {
    static const std::map<std::string, std::string> help{
        {"gen", "generate a graph and write it as JSON"},
        {"play", "play one game and write its trace"},
        {"solve", "decide a small game exactly"},
        {"boxgame", "play or solve a box game"},
        {"ballsbins", "run the balls-and-bins game and check the C(l) bound"},
        {"arrange", "build exception sets for an endgame"},
        {"formulas", "print strategy constants and rate functions"},
        {"estimate", "estimate the smallest k Maker wins reliably"},
        {"sweep", "resumable win-rate sweep over k and Breakers"},
    };
    return help;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coloring-game simulation lab"};
    app.require_subcommand(1);
    std::string config_path;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string out_dir;
    bool dump_config = false;
    app.add_option("--config", config_path, "JSON config file; flags override its values");
    auto* seed_opt = app.add_option("--seed", seed, "master seed");
    auto* workers_opt = app.add_option("--workers", workers, "worker threads (GCN_WORKERS takes precedence; default all cores)");
    auto* out_opt = app.add_option("--out-dir", out_dir, "root of out/<command>/<hash>/");
    app.add_flag("--dump-config", dump_config, "print the resolved config and exit");
    app.fallthrough();

    std::deque<std::string> storage;
    std::map<std::string, std::vector<Bound>> bound;
    for (const auto& [cmd, specs] : command_flags()) {
        auto* sub = app.add_subcommand(cmd, command_help().at(cmd));
        sub->set_help_flag("--help", "print this help and exit");
        for (const auto& s : specs) {
            storage.emplace_back();
            CLI::Option* o = s.is_switch ? sub->add_flag(s.name, s.help) : sub->add_option(s.name, storage.back(), s.help);
            bound[cmd].push_back({key_of(s.name), o, &storage.back(), s.is_switch});
        }
    }
    app.add_subcommand("run", "run the command named in --config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? gcn::kExitOk : gcn::kExitConfig;
    }

    gcn::ExperimentConfig cfg;
    try {
        if (!config_path.empty()) cfg = gcn::load_config_file(config_path);
    } catch (const gcn::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return gcn::kExitConfig;
    }
    const std::string chosen = app.get_subcommands().front()->get_name();
    if (chosen != "run") {
        if (!cfg.command.empty() && cfg.command != chosen) cfg.params = nlohmann::json::object();
        cfg.command = chosen;
        for (const auto& b : bound[chosen])
            if (b.opt->count() > 0) cfg.params[b.key] = b.is_switch ? nlohmann::json(true) : gcn::parse_flag_value(*b.value);
    } else if (cfg.command.empty()) {
        std::cerr << "config error: 'run' needs --config with a command\n";
        return gcn::kExitConfig;
    }
    if (seed_opt->count()) cfg.seed = seed;
    if (workers_opt->count()) cfg.workers = workers;
    if (out_opt->count()) cfg.out_dir = out_dir;

    if (dump_config) {
        std::cout << cfg.to_json().dump(2) << '\n';
        return gcn::kExitOk;
    }
    return gcn::run(cfg, std::cout, std::cerr);
}
