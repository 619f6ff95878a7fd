#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcn/rng.hpp"

namespace gcn {

// What an adversary sees before each decision.
struct BinsView {
    const std::vector<int>& loads;
    const std::vector<char>& removed;
    long t;             // balls thrown so far
    int level;          // min load over non-removed bins, -1 if none
    int removed_count;
};

// Player B: throws its own balls and every stolen M-ball, and may remove bins
// immediately before any ball.
class BinsAdversary {
public:
    virtual ~BinsAdversary() = default;
    virtual int choose_bin(const BinsView& view, Rng& rng) = 0;
    virtual std::vector<int> removals(const BinsView&, Rng&) { return {}; }
    // Consulted only under StealMode::Adversarial, when a steal is allowed.
    virtual bool steal(const BinsView&, Rng&) { return true; }
    virtual std::string name() const = 0;
};

enum class StealMode {
    Fixed,        // M-balls with index divisible by N are stolen
    Adversarial,  // B chooses, at most one steal in any N consecutive M-balls
};

struct BallRecord {
    long t = 0;          // 1-based ball index
    bool by_m = false;   // thrown by M's greedy rule
    bool stolen = false; // an M-turn played by B
    int bin = -1;
    int load_after = 0;
};

struct RemovalEvent {
    long time = 0;  // number of balls thrown before the removal
    int bin = -1;
    int load = 0;
};

// Load histogram of thrown balls (by load after the throw), frozen at the
// first time each level is reached.
struct LevelSnapshot {
    int level = 0;
    long time = 0;
    std::vector<long> thrown_at;  // thrown_at[x] = balls that landed at load x
};

struct BinsTrace {
    int k = 0;
    int N = 0;
    std::vector<BallRecord> balls;
    std::vector<RemovalEvent> removals;
    // level_at[t] = min non-removed load after ball t and the removals that
    // follow it; -1 once every bin is removed.
    std::vector<int> level_at;
    std::vector<LevelSnapshot> first_hits;  // strictly increasing levels
    std::vector<int> final_loads;
    std::vector<char> final_removed;
    bool all_removed = false;

    // t(l), or nullopt if level l was never attained.
    std::optional<long> time_of_level(int level) const;
};

class BinsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Balls alternate M, B, M, B, ... starting with M. M always targets a
// minimum-load non-removed bin (smallest index on ties).
BinsTrace play_ballsbins(int k, int N, BinsAdversary& adversary, long horizon, std::uint64_t seed,
                         StealMode steal_mode = StealMode::Fixed);

// C(l): balls thrown at loads l' with l < l' <= a until time t(l), from the
// frozen level snapshot.
long c_of_level(const BinsTrace& trace, int level, int a);
// Same quantity recomputed from the raw per-ball records.
long c_of_level_from_records(const BinsTrace& trace, int level, int a);

// k l (N+1)(a-l) / ((N-1)(a-1)).
double level_load_bound(int k, int N, int level, int a);

struct LevelLoadViolation {
    int level;
    long c;
    double bound;
};
std::vector<LevelLoadViolation> check_level_loads(const BinsTrace& trace, int a);

struct LowBinsResult {
    bool applicable = false;
    std::string reason;  // why not applicable
    bool holds = false;
    int count = 0;       // non-removed bins with load <= a at time t
    double threshold = 0;
};
LowBinsResult check_low_bins(const BinsTrace& trace, double xi, int a, int N, long t);

// Loads and removed flags at time t (after ball t and its trailing removals).
struct BinsSnapshot {
    std::vector<int> loads;
    std::vector<char> removed;
    std::vector<int> removed_load;  // load at removal, -1 if not removed
};
BinsSnapshot bins_at(const BinsTrace& trace, long t);

// --- adversaries ---
std::unique_ptr<BinsAdversary> make_random_adversary(double removal_prob, int max_removals);
// Stack one bin up to `a`, then switch to the next.
std::unique_ptr<BinsAdversary> make_stacker_adversary(int a);
// Throws onto the least-loaded bin strictly above the level (below a), to
// push balls into the (l, a] window.
std::unique_ptr<BinsAdversary> make_just_above_adversary(int a);
// Frequently removes minimum-load bins, otherwise stacks.
std::unique_ptr<BinsAdversary> make_removal_heavy_adversary(double removal_prob, int max_removals, int a);
// Never removes; plays minimum-load bins like M.
std::unique_ptr<BinsAdversary> make_leveler_adversary();
// Script lines: "ball <bin>" or "remove <bin>", consumed in order; random
// throws once the script is exhausted.
std::unique_ptr<BinsAdversary> make_scripted_adversary(const std::string& script);

}  // namespace gcn
