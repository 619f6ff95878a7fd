#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gcn/analysis.hpp"
#include "gcn/arranger.hpp"
#include "gcn/boxgame.hpp"
#include "gcn/game.hpp"

namespace gcn {

struct MonitorViolation {
    std::string monitor;  // "level", "elimination", "dangerous:h=<h>"
    int t = 0;
    double value = 0;
    double threshold = 0;
    int level = -1;
    int uncolored = 0;
};

struct MonitorStep {
    int t = 0;
    int level = -1;
    int near_level = 0;        // active colors with |C_i| <= level + xi log_b np
    int eliminated_low = 0;    // running count of colors eliminated while small
    std::vector<int> dangerous;  // per phase h: |{v : a(v) < beta(h)/2}|, -1 if preconditions fail
};

struct MonitorReport {
    int n = 0;
    double p = 0;
    double alpha = 0;
    int k = 0;
    double xi = 0;
    double log_b_np = 0;
    double gate = 0;              // monitored while uncolored >= (np)^{1-4 xi}
    double level_threshold = 0;   // (1/alpha + xi) log_b np
    double near_threshold_8 = 0;  // xi k / 8
    double near_threshold_10 = 0; // xi k / 10
    int elimination_budget = 0;   // ceil((np)^{1-4 xi})
    std::vector<double> phases;

    int steps = 0;
    int level_violations = 0;
    int elimination_violations = 0;
    int near_below_8 = 0;
    int near_below_10 = 0;
    int min_near_level = -1;
    std::string binding_near_threshold;  // "none", "xi*k/8", "both"
    int dangerous_checks = 0;
    int dangerous_violations = 0;
    int max_eliminated_low = 0;
    std::vector<MonitorViolation> violations;
    std::vector<MonitorStep> step_log;  // filled when requested

    nlohmann::json to_json() const;
};

// Replays the trace and tracks the level bound, the near-level color count,
// the count of colors eliminated while small, and dangerous-vertex counts per
// phase. Violations are recorded, never thrown.
MonitorReport trace_monitors(const Graph& graph, const GameTrace& trace, double p, double alpha,
                             bool keep_steps = false);

struct DecompositionOptions {
    std::optional<int> N;           // Maker's first-type period; parsed from the trace header if absent
    std::optional<int> cut_time;    // analyse the coloring at this time instead of a Breaker win
    std::optional<int> q_override;  // integer Breaker power for the arrangement/box game
};

struct DecompositionReport {
    int t = 0;         // time of loss (t-1 vertices colored)
    Vertex v0 = -1;
    bool padded = false;     // fewer than ceil((np)^{1-4xi}) uncolored: recent colorings stripped
    int phase_level = -1;    // level of the phase-defining coloring
    std::optional<double> h;
    double beta = 0, gamma = 0, q_real = 0;
    int N = 0;
    std::optional<int> t_prime;
    std::vector<Vertex> U;
    bool cond_i = false;
    bool cond_ii = false;
    Vertex cond_ii_failure = -1;
    bool endgame_bound_ok = false;  // t - t' + 1 <= 2 N gamma(h) + 1
    int q_used = 0;
    std::optional<ArrangementReport> arrangement;
    int max_s = 0;
    std::optional<Cascade> cascade;
    std::optional<BoxInstance> box;
    std::optional<CriterionResult> criterion;
    int t_hat = 0;
    std::optional<int> t_star;
    std::string first_failure;  // empty when every checked condition holds

    nlohmann::json to_json() const;
};

// Decomposes a lost game into the endgame box game: picks the phase h, the
// last first-type Maker move t' with a(v) >= beta(h)/2, the vertex set U, runs
// color_arranging with q(h) and checks the box-game criterion. Throws if the
// trace has no Breaker win and no cut time is given.
DecompositionReport endgame_decomposition(const Graph& graph, const GameTrace& trace, double p, double alpha,
                                          const DecompositionOptions& options = {});

// N from a "paper:N=..." descriptor; 1 for "greedy"; nullopt otherwise.
std::optional<int> maker_period_from_descriptor(const std::string& descriptor);

}  // namespace gcn
