#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "commands.hpp"
#include "gcn/analysis.hpp"
#include "gcn/estimate.hpp"
#include "gcn/game.hpp"
#include "gcn/monitors.hpp"
#include "gcn/parallel.hpp"
#include "gcn/rng.hpp"
#include "gcn/strategies.hpp"

namespace gcn::detail {

namespace {

constexpr const char* kHeader =
    "config,k,breaker,playout,seed,maker,outcome,moves,witness,final_level,level_violations,"
    "elimination_violations,max_eliminated_low,min_near_level,wall_ms";
constexpr std::size_t kColumns = 15;

using Key = std::tuple<int, std::string, int>;  // k, breaker, playout

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> f;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, ',')) f.push_back(cur);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    return f;
}

struct Existing {
    std::map<Key, std::string> rows;
    bool dropped_partial_line = false;
};

// Reads a partial records.csv. A final line without newline is an
// interrupted write and is dropped; anything else malformed is an error.
Existing load_existing(const std::filesystem::path& path, const std::string& hash, const std::set<int>& ks,
                       const std::set<std::string>& breakers, int playouts) {
    Existing ex;
    if (!std::filesystem::exists(path)) return ex;
    const std::string text = read_text_file(path);
    if (text.empty()) return ex;
    std::size_t pos = 0;
    int line_no = 0;
    auto corrupt = [&](const std::string& why) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": corrupt partial results (" +
                                 why + ")");
    };
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        ++line_no;
        if (nl == std::string::npos) {
            ex.dropped_partial_line = true;
            break;
        }
        const std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line_no == 1) {
            if (line != kHeader) corrupt("unexpected header");
            continue;
        }
        const auto f = split_csv(line);
        if (f.size() != kColumns) corrupt("expected " + std::to_string(kColumns) + " fields");
        if (f[0] != hash) corrupt("record from a different configuration");
        int k = 0, playout = 0;
        try {
            k = std::stoi(f[1]);
            playout = std::stoi(f[3]);
        } catch (const std::exception&) {
            corrupt("bad k or playout");
        }
        if (!ks.count(k) || !breakers.count(f[2]) || playout < 0 || playout >= playouts) corrupt("cell outside the grid");
        if (!ex.rows.emplace(Key{k, f[2], playout}, line).second) corrupt("duplicate record");
    }
    if (ex.dropped_partial_line) {
        // Truncate to the last complete line so appends stay well-formed.
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        f << text.substr(0, pos);
    }
    return ex;
}

std::string opt_int(int v) { return v < 0 ? "" : std::to_string(v); }

}  // namespace

int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& P = cfg.params;
    const int n = param_int(P, "n");
    const double p = param_double(P, "p");
    const auto maker_desc = param_string(P, "maker", "paper:auto");
    const auto breakers = param_string_list(P, "breakers", {"random", "colorhog", "minavail"});
    auto ks = param_int_list(P, "k");
    const int playouts = param_int(P, "playouts", 20);
    const bool monitors = param_bool(P, "monitors", true) && p > 0 && p < 1 && n * p > 1;
    const std::optional<double> fixed_alpha =
        P.contains("alpha") ? std::optional<double>(param_double(P, "alpha")) : std::nullopt;
    const bool save_traces = param_bool(P, "save_traces", false);
    const long max_new = param_int(P, "max_new_records", -1);
    if (n < 1 || !(p >= 0 && p <= 1) || playouts < 1) throw ConfigError("sweep needs n >= 1, p in [0,1], playouts >= 1");
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int k : ks)
        if (k < 1) throw ConfigError("k must be >= 1");
    for (const auto& b : breakers)
        if (b == "matching") throw ConfigError("the matching breaker needs a bipartite graph");

    std::vector<std::unique_ptr<Strategy>> makers;
    std::vector<std::string> maker_names;
    for (int k : ks) {
        maker_names.push_back(resolve_maker(maker_desc, n, p, k));
        makers.push_back(make_strategy(maker_names.back()));
    }
    std::vector<std::unique_ptr<Strategy>> breaker_strats;
    for (const auto& b : breakers) breaker_strats.push_back(make_strategy(b));

    const std::string hash = config_hash(cfg);
    const auto dir = run_directory(cfg);
    const auto records = dir / "records.csv";
    if (save_traces) std::filesystem::create_directories(dir / "traces");

    auto existing = load_existing(records, hash, {ks.begin(), ks.end()}, {breakers.begin(), breakers.end()}, playouts);
    if (existing.dropped_partial_line) err << "note: dropped an incomplete trailing record\n";
    const std::size_t resumed = existing.rows.size();

    nlohmann::json meta = {{"config", cfg.to_json()}, {"hash", hash}, {"status", "running"}};
    write_text_file(dir / "meta.json", meta.dump(2) + "\n");

    std::ofstream sink(records, std::ios::binary | std::ios::app);
    if (!sink) throw std::runtime_error("cannot write " + records.string());
    if (existing.rows.empty() && std::filesystem::file_size(records) == 0) sink << kHeader << '\n' << std::flush;

    std::mutex sink_mutex;
    long written = 0;
    bool stopped = false;
    const auto t_start = std::chrono::steady_clock::now();

    parallel_for(static_cast<std::size_t>(playouts), resolve_workers(cfg.workers), [&](std::size_t i) {
        std::vector<std::pair<std::size_t, std::size_t>> todo;
        for (std::size_t ki = 0; ki < ks.size(); ++ki)
            for (std::size_t bi = 0; bi < breakers.size(); ++bi)
                if (!existing.rows.count(Key{ks[ki], breakers[bi], static_cast<int>(i)})) todo.emplace_back(ki, bi);
        if (todo.empty()) return;
        {
            std::lock_guard lock(sink_mutex);
            if (stopped) return;
        }
        const std::uint64_t graph_seed = mix(cfg.seed, i);
        const Graph g = gen_gnp(n, p, graph_seed);
        for (auto [ki, bi] : todo) {
            const int k = ks[ki];
            const std::uint64_t game_seed = mix(graph_seed, static_cast<std::uint64_t>(k));
            const auto t0 = std::chrono::steady_clock::now();
            PlayOptions opt;
            opt.graph_id = "gnp:n=" + std::to_string(n) + ",seed=" + std::to_string(graph_seed);
            const auto trace = play_game(g, k, *makers[ki], *breaker_strats[bi], game_seed, opt);
            if (trace.outcome == Outcome::Aborted)
                throw std::runtime_error("playout aborted (k=" + std::to_string(k) + ", " + breakers[bi] +
                                         "): " + trace.diagnostic);
            std::string mon = ",,,";
            if (monitors) {
                const double alpha = fixed_alpha.value_or(k * log_b_np(n, p) / n);
                if (alpha > 1) {
                    const auto r = trace_monitors(g, trace, p, alpha);
                    mon = std::to_string(r.level_violations) + ',' + std::to_string(r.elimination_violations) + ',' +
                          std::to_string(r.max_eliminated_low) + ',' + opt_int(r.min_near_level);
                }
            }
            const int final_level = trace.snapshots.empty() ? -1 : trace.snapshots.back().level;
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            char wall[32];
            std::snprintf(wall, sizeof wall, "%.1f", ms);
            std::ostringstream row;
            row << hash << ',' << k << ',' << breakers[bi] << ',' << i << ',' << game_seed << ',' << maker_names[ki]
                << ',' << to_string(trace.outcome) << ',' << trace.moves.size() << ',' << opt_int(trace.witness) << ','
                << opt_int(final_level) << ',' << mon << ',' << wall;
            if (save_traces) {
                std::ofstream tf(dir / "traces" /
                                 ("k" + std::to_string(k) + "_" + breakers[bi] + "_" + std::to_string(i) + ".jsonl"));
                write_trace_jsonl(tf, trace);
            }
            std::lock_guard lock(sink_mutex);
            if (stopped) return;
            sink << row.str() << '\n' << std::flush;
            if (!sink) throw std::runtime_error("write failed: " + records.string());
            if (max_new >= 0 && ++written >= max_new) stopped = true;
        }
    });
    sink.close();

    const std::size_t expected = ks.size() * breakers.size() * static_cast<std::size_t>(playouts);
    auto all = load_existing(records, hash, {ks.begin(), ks.end()}, {breakers.begin(), breakers.end()}, playouts);
    const bool complete = all.rows.size() == expected;
    if (complete) {
        // Canonical order: k ascending, breakers in configured order, playout ascending.
        std::map<std::string, std::size_t> border;
        for (std::size_t b = 0; b < breakers.size(); ++b) border[breakers[b]] = b;
        std::vector<std::pair<Key, std::string>> rows(all.rows.begin(), all.rows.end());
        std::sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
            const auto& [k1, b1, i1] = x.first;
            const auto& [k2, b2, i2] = y.first;
            return std::tuple(k1, border[b1], i1) < std::tuple(k2, border[b2], i2);
        });
        std::string body = std::string(kHeader) + '\n';
        for (const auto& r : rows) body += r.second + '\n';
        const auto tmp = records.string() + ".tmp";
        write_text_file(tmp, body);
        std::filesystem::rename(tmp, records);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    meta["status"] = complete ? "complete" : "partial";
    meta["records"] = all.rows.size();
    meta["expected_records"] = expected;
    meta["resumed_records"] = resumed;
    meta["wall_seconds"] = secs;
    meta["workers"] = resolve_workers(cfg.workers);
    write_text_file(dir / "meta.json", meta.dump(2) + "\n");
    out << records.string() << '\n';
    err << (complete ? "complete: " : "partial: ") << all.rows.size() << "/" << expected << " records\n";
    return kExitOk;
}

}  // namespace gcn::detail
