#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gcn/game.hpp"

namespace gcn {

struct PhasedMakerConfig {
    // Every N-th Maker move (move indices divisible by N) is of the first type.
    int N = 1;
    // First type: which color of A(v,C) to use.
    enum class FirstColor { SmallestClass, SmallestIndex } first_color = FirstColor::SmallestClass;
    // Second type: which vertex receives the smallest usable color.
    enum class SecondVertex { MinAvailability, SmallestIndex } second_vertex = SecondVertex::MinAvailability;
};

// 1-based index of the Maker move made at time t (t odd).
inline int maker_move_index(int t) { return (t + 1) / 2; }
inline bool is_first_type(int t, int N) { return maker_move_index(t) % N == 0; }

MoveChoice maker_phased(const GameState& state, const PhasedMakerConfig& config);
MoveChoice maker_greedy(const GameState& state);

enum class BreakerKind { Random, ColorHog, MinAvailAttack };

// Candidate cap for the MinAvailAttack 1-ply lookahead.
inline constexpr std::size_t kMinAvailCandidates = 256;

MoveChoice breaker_move(BreakerKind kind, const GameState& state, Rng& rng);
// Mirrors Maker's last move onto the matched partner, else MinAvailAttack.
MoveChoice breaker_matching(const GameState& state, const std::vector<Vertex>& partner, Rng& rng);

// Post-move (min a(w), count at min) over uncolored w != v for the move (v,c).
// min is INT_MAX when no uncolored vertex would remain.
struct LookaheadScore {
    int min_avail;
    int count_at_min;
};
LookaheadScore evaluate_move(const GameState& state, Vertex v, Color c);

class PhasedMakerStrategy final : public Strategy {
public:
    explicit PhasedMakerStrategy(PhasedMakerConfig config);
    MoveChoice choose(const GameState& state, Rng&) const override { return maker_phased(state, config_); }
    std::string descriptor() const override;
    const PhasedMakerConfig& config() const { return config_; }

private:
    PhasedMakerConfig config_;
};

class MakerGreedyStrategy final : public Strategy {
public:
    MoveChoice choose(const GameState& state, Rng&) const override { return maker_greedy(state); }
    std::string descriptor() const override { return "greedy"; }
};

class BreakerStrategy final : public Strategy {
public:
    explicit BreakerStrategy(BreakerKind kind) : kind_(kind) {}
    MoveChoice choose(const GameState& state, Rng& rng) const override { return breaker_move(kind_, state, rng); }
    std::string descriptor() const override;

private:
    BreakerKind kind_;
};

class MatchingBreakerStrategy final : public Strategy {
public:
    explicit MatchingBreakerStrategy(std::vector<Vertex> partner);
    MoveChoice choose(const GameState& state, Rng& rng) const override {
        return breaker_matching(state, partner_, rng);
    }
    std::string descriptor() const override { return "matching"; }

private:
    std::vector<Vertex> partner_;
};

// Parses `paper:N=160`, `paper:N=8,color=index,vertex=index`, `greedy`,
// `random`, `colorhog`, `minavail`, `matching`. `matching` needs the partner
// table. Throws std::invalid_argument on unknown descriptors.
std::unique_ptr<Strategy> make_strategy(std::string_view descriptor, const std::vector<Vertex>* partner = nullptr);

}  // namespace gcn
