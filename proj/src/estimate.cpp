#include "gcn/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "gcn/analysis.hpp"
#include "gcn/game.hpp"
#include "gcn/parallel.hpp"
#include "gcn/rng.hpp"
#include "gcn/strategies.hpp"

namespace gcn {

Interval wilson_interval(int successes, int trials, double z) {
    if (trials <= 0) return {0, 1};
    const double n = trials;
    const double phat = successes / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double centre = (phat + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    if (successes <= 0) return {0, std::min(1.0, centre + half)};
    if (successes >= trials) return {std::max(0.0, centre - half), 1};
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::string resolve_maker(const std::string& descriptor, int n, double p, int k) {
    if (descriptor != "paper:auto") return descriptor;
    if (!(p > 0 && p < 1) || n < 2 || n * p <= 1) return "paper:N=1";
    const double alpha = k * log_b_np(n, p) / n;
    int N = n;
    if (alpha > 1) N = std::min(constants(alpha).N, n);
    return "paper:N=" + std::to_string(std::max(N, 1));
}

std::vector<WinCell> play_cells(const EstimateConfig& config, const std::vector<int>& ks) {
    if (config.playouts < 1) throw std::invalid_argument("estimate: playouts must be >= 1");
    if (config.breakers.empty()) throw std::invalid_argument("estimate: no breakers given");
    std::vector<std::unique_ptr<Strategy>> makers;
    for (int k : ks) {
        if (k < 1) throw std::invalid_argument("estimate: k must be >= 1");
        makers.push_back(make_strategy(resolve_maker(config.maker, config.n, config.p, k)));
    }
    std::vector<std::unique_ptr<Strategy>> breakers;
    for (const auto& b : config.breakers) {
        if (b == "matching") throw std::invalid_argument("estimate: the matching breaker needs a bipartite graph");
        breakers.push_back(make_strategy(b));
    }

    const std::size_t K = ks.size(), B = breakers.size();
    // outcome[(i*K + ki)*B + bi]: 1 Maker won, 0 Breaker won
    std::vector<char> outcome(static_cast<std::size_t>(config.playouts) * K * B, 0);
    parallel_for(static_cast<std::size_t>(config.playouts), resolve_workers(config.workers), [&](std::size_t i) {
        const std::uint64_t graph_seed = mix(config.seed, i);
        const Graph g = gen_gnp(config.n, config.p, graph_seed);
        for (std::size_t ki = 0; ki < K; ++ki) {
            const std::uint64_t game_seed = mix(graph_seed, static_cast<std::uint64_t>(ks[ki]));
            for (std::size_t bi = 0; bi < B; ++bi) {
                const auto trace = play_game(g, ks[ki], *makers[ki], *breakers[bi], game_seed);
                if (trace.outcome == Outcome::Aborted)
                    throw std::runtime_error("playout " + std::to_string(i) + " aborted: " + trace.diagnostic);
                outcome[(i * K + ki) * B + bi] = trace.outcome == Outcome::MakerWon ? 1 : 0;
            }
        }
    });

    std::vector<WinCell> cells;
    for (std::size_t ki = 0; ki < K; ++ki)
        for (std::size_t bi = 0; bi < B; ++bi) {
            WinCell cell;
            cell.k = ks[ki];
            cell.breaker = config.breakers[bi];
            for (int i = 0; i < config.playouts; ++i)
                (outcome[(static_cast<std::size_t>(i) * K + ki) * B + bi] ? cell.wins : cell.losses)++;
            cell.rate = static_cast<double>(cell.wins) / config.playouts;
            const auto ci = wilson_interval(cell.wins, config.playouts);
            cell.ci_lo = ci.lo;
            cell.ci_hi = ci.hi;
            cells.push_back(cell);
        }
    return cells;
}

std::vector<MonotonicityViolation> monotonicity_violations(const std::vector<WinCell>& cells) {
    std::vector<MonotonicityViolation> out;
    for (const auto& a : cells)
        for (const auto& b : cells)
            if (a.breaker == b.breaker && a.k < b.k && b.ci_hi < a.ci_lo) out.push_back({a.breaker, a.k, b.k});
    return out;
}

namespace {

bool passes(const std::vector<WinCell>& cells, int k, double threshold) {
    bool any = false;
    for (const auto& c : cells)
        if (c.k == k) {
            any = true;
            if (c.rate < threshold) return false;
        }
    return any;
}

}  // namespace

EstimateResult estimate_chi_g(const EstimateConfig& config) {
    if (config.n < 1) throw std::invalid_argument("estimate: n must be >= 1");
    if (!(config.p >= 0 && config.p <= 1)) throw std::invalid_argument("estimate: p must lie in [0,1]");
    EstimateResult result;
    if (config.p > 0 && config.p < 1 && config.n * config.p > 1) {
        const double l = log_b_np(config.n, config.p);
        result.anchor_game = config.n / l;
        result.anchor_chromatic = config.n / (2 * l);
    } else {
        result.anchor_game = result.anchor_chromatic = std::nan("");
    }

    if (!config.grid.empty()) {
        auto ks = config.grid;
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
        result.cells = play_cells(config, ks);
        // Smallest grid k from which every larger grid k passes.
        for (auto it = ks.rbegin(); it != ks.rend() && passes(result.cells, *it, config.threshold); ++it)
            result.k_star = *it;
    } else {
        int lo = 1, hi = config.n;
        auto probe = [&](int k) {
            auto cells = play_cells(config, {k});
            const bool ok = passes(cells, k, config.threshold);
            result.cells.insert(result.cells.end(), cells.begin(), cells.end());
            return ok;
        };
        if (probe(hi)) {
            while (lo < hi) {
                const int mid = lo + (hi - lo) / 2;
                if (probe(mid))
                    hi = mid;
                else
                    lo = mid + 1;
            }
            result.k_star = lo;
        }
        std::stable_sort(result.cells.begin(), result.cells.end(),
                         [](const WinCell& a, const WinCell& b) { return a.k < b.k; });
    }
    result.monotonicity = monotonicity_violations(result.cells);
    return result;
}

std::string format_rate(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

void write_cells_csv(std::ostream& out, const std::vector<WinCell>& cells) {
    out << "k,breaker,wins,losses,rate,ci_lo,ci_hi\n";
    for (const auto& c : cells)
        out << c.k << ',' << c.breaker << ',' << c.wins << ',' << c.losses << ',' << format_rate(c.rate) << ','
            << format_rate(c.ci_lo) << ',' << format_rate(c.ci_hi) << '\n';
}

}  // namespace gcn
