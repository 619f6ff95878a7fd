#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcn/bitset.hpp"
#include "gcn/graph.hpp"
#include "gcn/rng.hpp"

namespace gcn {

// Colors are 1..k; 0 marks an uncolored vertex.
using Color = int;
inline constexpr Color kUncolored = 0;

enum class Player { Maker, Breaker };

struct MoveChoice {
    Vertex v = -1;
    Color c = kUncolored;
    bool operator==(const MoveChoice&) const = default;
};

class IllegalMove : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Coloring-game position: graph, partial coloring, and the availability
// bookkeeping A(v,C), a(v,C), per-color carrier sets and class sizes, all
// maintained incrementally by apply().
//
// The graph is referenced, not owned, and must outlive the state.
class GameState {
public:
    GameState(const Graph& graph, int k);

    const Graph& graph() const { return *graph_; }
    int n() const { return graph_->n(); }
    int k() const { return k_; }

    // Index of the next move; t()-1 vertices are colored.
    int t() const { return colored_ + 1; }
    int colored_count() const { return colored_; }
    int uncolored_count() const { return n() - colored_; }
    // Maker moves at odd t.
    Player to_move() const { return (t() % 2 == 1) ? Player::Maker : Player::Breaker; }

    Color color_of(Vertex v) const { return color_of_[v]; }
    bool is_colored(Vertex v) const { return color_of_[v] != kUncolored; }
    const std::vector<Color>& coloring() const { return color_of_; }
    const Bitset& uncolored() const { return uncolored_; }

    int class_size(Color c) const { return class_size_[c]; }
    // Bit c-1 is set iff color c is available at v. Meaningful for uncolored v only.
    const Bitset& available(Vertex v) const { return avail_[v]; }
    int avail_count(Vertex v) const { return avail_count_[v]; }
    bool is_available(Vertex v, Color c) const { return avail_[v].test(static_cast<std::size_t>(c - 1)); }

    // Uncolored vertices at which color c is still available.
    const Bitset& carriers(Color c) const { return carriers_[c]; }
    int carrier_count(Color c) const { return carrier_count_[c]; }
    bool is_active(Color c) const { return carrier_count_[c] > 0; }

    // Uncolored vertices v with a(v,C) == a.
    const Bitset& with_availability(int a) const { return bucket_[a]; }
    int count_with_availability(int a) const { return bucket_count_[a]; }
    // Minimum a(v,C) over uncolored vertices, or -1 if every vertex is colored.
    int min_availability() const;

    int uncolored_degree(Vertex v) const { return uncolored_degree_[v]; }
    std::optional<MoveChoice> last_move() const { return last_move_; }

    bool is_legal(Vertex v, Color c) const;
    // Colors v with c. Throws IllegalMove unless c is available at uncolored v.
    void apply(Vertex v, Color c);

private:
    const Graph* graph_;
    int k_;
    int colored_ = 0;
    std::vector<Color> color_of_;
    Bitset uncolored_;
    std::vector<int> class_size_;
    std::vector<Bitset> avail_;
    std::vector<int> avail_count_;
    std::vector<Bitset> carriers_;
    std::vector<int> carrier_count_;
    std::vector<Bitset> bucket_;
    std::vector<int> bucket_count_;
    std::vector<int> uncolored_degree_;
    std::optional<MoveChoice> last_move_;
};

// A(v,C) as an ascending list. Throws if v is colored or out of range.
std::vector<Color> available_colors(const GameState& state, Vertex v);
void apply_move(GameState& state, Vertex v, Color c);

// Minimum size of an active color class; nullopt when no color is active.
std::optional<int> level(const GameState& state);
std::vector<Color> active_colors(const GameState& state);

struct GameStatus {
    enum class Kind { Ongoing, MakerWon, BreakerWon } kind = Kind::Ongoing;
    Vertex witness = -1;  // an uncolored vertex with a(v,C) = 0 when BreakerWon
};
GameStatus game_status(const GameState& state);

// Decision procedure for one player. Implementations are pure functions of
// (state, rng stream, own configuration).
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual MoveChoice choose(const GameState& state, Rng& rng) const = 0;
    virtual std::string descriptor() const = 0;
};

enum class Outcome { MakerWon, BreakerWon, Truncated, Aborted };
std::string to_string(Outcome o);

struct TraceMove {
    int t = 0;
    Player player = Player::Maker;
    Vertex v = -1;
    Color c = kUncolored;
    bool operator==(const TraceMove&) const = default;
};

// Level and minimum availability after a prefix of moves; -1 when undefined.
struct Snapshot {
    int level = -1;
    int min_avail = -1;
    bool operator==(const Snapshot&) const = default;
};

struct TraceHeader {
    std::string graph_id;
    int n = 0;
    int k = 0;
    std::string maker;
    std::string breaker;
    std::uint64_t seed = 0;
    bool operator==(const TraceHeader&) const = default;
};

struct GameTrace {
    TraceHeader header;
    std::vector<TraceMove> moves;
    // snapshots[i] describes the coloring after the first i moves.
    std::vector<Snapshot> snapshots;
    Outcome outcome = Outcome::Truncated;
    Vertex witness = -1;
    std::string diagnostic;
};

struct PlayOptions {
    int max_moves = -1;  // negative: play to the end
    std::string graph_id;
};

// Alternates maker and breaker (Maker first) until the game is decided.
// Each player draws from its own stream derived from `seed`.
GameTrace play_game(const Graph& graph, int k, const Strategy& maker, const Strategy& breaker,
                    std::uint64_t seed, const PlayOptions& options = {});

Snapshot snapshot_of(const GameState& state);

// Replays a trace's moves from the empty coloring. Returns the state after
// the first `prefix` moves (all moves if prefix < 0).
GameState replay(const Graph& graph, const GameTrace& trace, int prefix = -1);
// True iff replaying reproduces every recorded snapshot and the outcome.
bool replay_matches(const Graph& graph, const GameTrace& trace);

// Trace JSONL: header line, one line per move, footer line.
void write_trace_jsonl(std::ostream& out, const GameTrace& trace);
GameTrace read_trace_jsonl(std::istream& in);

}  // namespace gcn
