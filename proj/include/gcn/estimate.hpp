#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcn/graph.hpp"

namespace gcn {

inline constexpr double kWilsonZ95 = 1.959963984540054;

struct Interval {
    double lo = 0;
    double hi = 1;
};
// Wilson score interval for a binomial proportion; [0,1] when trials == 0.
Interval wilson_interval(int successes, int trials, double z = kWilsonZ95);

struct WinCell {
    int k = 0;
    std::string breaker;
    int wins = 0;
    int losses = 0;
    double rate = 0;
    double ci_lo = 0;
    double ci_hi = 1;
};

struct EstimateConfig {
    int n = 0;
    double p = 0;
    // "paper:auto" picks N from the strategy constants at alpha = k log_b np / n.
    std::string maker = "paper:auto";
    std::vector<std::string> breakers{"random", "colorhog", "minavail"};
    int playouts = 100;
    std::uint64_t seed = 0;
    double threshold = 0.95;
    std::vector<int> grid;  // empty: binary search over [1, n]
    unsigned workers = 0;
};

struct MonotonicityViolation {
    std::string breaker;
    int k_low = 0;
    int k_high = 0;  // ci_hi(k_high) < ci_lo(k_low)
};

struct EstimateResult {
    std::vector<WinCell> cells;  // ascending k, breakers in config order
    std::optional<int> k_star;
    double anchor_game = 0;       // n / log_b np
    double anchor_chromatic = 0;  // n / (2 log_b np)
    std::vector<MonotonicityViolation> monotonicity;
};

// Concrete Maker descriptor for k colors; resolves "paper:auto".
std::string resolve_maker(const std::string& descriptor, int n, double p, int k);

// Plays `playouts` games per (k, breaker). Playout i uses the graph
// gen_gnp(n, p, mix(seed, i)) for every k and breaker, and game seed
// mix(mix(seed, i), k).
std::vector<WinCell> play_cells(const EstimateConfig& config, const std::vector<int>& ks);

std::vector<MonotonicityViolation> monotonicity_violations(const std::vector<WinCell>& cells);

EstimateResult estimate_chi_g(const EstimateConfig& config);

// CSV with header `k,breaker,wins,losses,rate,ci_lo,ci_hi`.
void write_cells_csv(std::ostream& out, const std::vector<WinCell>& cells);
std::string format_rate(double x);

}  // namespace gcn
