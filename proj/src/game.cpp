#include "gcn/game.hpp"

#include <algorithm>

namespace gcn {

GameState::GameState(const Graph& graph, int k) : graph_(&graph), k_(k) {
    if (k < 1) throw std::invalid_argument("game: k must be at least 1");
    const auto n = static_cast<std::size_t>(graph.n());
    const auto colors = static_cast<std::size_t>(k);
    color_of_.assign(n, kUncolored);
    uncolored_ = Bitset(n, true);
    class_size_.assign(colors + 1, 0);
    avail_.assign(n, Bitset(colors, true));
    avail_count_.assign(n, k);
    carriers_.assign(colors + 1, Bitset(n, true));
    carriers_[0] = Bitset(n);
    carrier_count_.assign(colors + 1, graph.n());
    carrier_count_[0] = 0;
    bucket_.assign(colors + 1, Bitset(n));
    bucket_count_.assign(colors + 1, 0);
    bucket_[colors] = Bitset(n, true);
    bucket_count_[colors] = graph.n();
    uncolored_degree_.resize(n);
    for (Vertex v = 0; v < graph.n(); ++v) uncolored_degree_[v] = graph.degree(v);
}

int GameState::min_availability() const {
    if (colored_ == n()) return -1;
    for (int a = 0; a <= k_; ++a)
        if (bucket_count_[a] > 0) return a;
    return -1;
}

bool GameState::is_legal(Vertex v, Color c) const {
    return v >= 0 && v < n() && c >= 1 && c <= k_ && !is_colored(v) && is_available(v, c);
}

void GameState::apply(Vertex v, Color c) {
    if (!is_legal(v, c))
        throw IllegalMove("illegal move: vertex " + std::to_string(v) + " color " + std::to_string(c));
    const auto vi = static_cast<std::size_t>(v);

    uncolored_.reset(vi);
    bucket_[avail_count_[v]].reset(vi);
    --bucket_count_[avail_count_[v]];
    avail_[v].for_each([&](std::size_t bit) {
        carriers_[bit + 1].reset(vi);
        --carrier_count_[bit + 1];
    });
    color_of_[v] = c;
    ++class_size_[c];
    ++colored_;

    // Uncolored neighbours still offering c lose it.
    const Bitset& row = graph_->row(v);
    auto rw = row.words();
    auto cw = carriers_[c].words();
    const auto cbit = static_cast<std::size_t>(c - 1);
    for (std::size_t wi = 0; wi < rw.size(); ++wi) {
        auto hit = rw[wi] & cw[wi];
        while (hit) {
            const auto w = wi * Bitset::word_bits + static_cast<std::size_t>(std::countr_zero(hit));
            hit &= hit - 1;
            avail_[w].reset(cbit);
            const int a = avail_count_[w]--;
            bucket_[a].reset(w);
            --bucket_count_[a];
            bucket_[a - 1].set(w);
            ++bucket_count_[a - 1];
            --carrier_count_[c];
        }
    }
    carriers_[c].subtract(row);
    row.for_each([&](std::size_t w) { --uncolored_degree_[w]; });
    last_move_ = MoveChoice{v, c};
}

std::vector<Color> available_colors(const GameState& state, Vertex v) {
    if (v < 0 || v >= state.n()) throw std::out_of_range("available_colors: vertex out of range");
    if (state.is_colored(v)) throw std::invalid_argument("available_colors: vertex is colored");
    std::vector<Color> out;
    state.available(v).for_each([&](std::size_t bit) { out.push_back(static_cast<Color>(bit + 1)); });
    return out;
}

void apply_move(GameState& state, Vertex v, Color c) { state.apply(v, c); }

std::optional<int> level(const GameState& state) {
    std::optional<int> best;
    for (Color c = 1; c <= state.k(); ++c)
        if (state.is_active(c) && (!best || state.class_size(c) < *best)) best = state.class_size(c);
    return best;
}

std::vector<Color> active_colors(const GameState& state) {
    std::vector<Color> out;
    for (Color c = 1; c <= state.k(); ++c)
        if (state.is_active(c)) out.push_back(c);
    return out;
}

GameStatus game_status(const GameState& state) {
    if (state.uncolored_count() == 0) return {GameStatus::Kind::MakerWon, -1};
    if (state.count_with_availability(0) > 0)
        return {GameStatus::Kind::BreakerWon, static_cast<Vertex>(state.with_availability(0).find_first())};
    return {GameStatus::Kind::Ongoing, -1};
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::MakerWon: return "MakerWon";
        case Outcome::BreakerWon: return "BreakerWon";
        case Outcome::Truncated: return "Truncated";
        case Outcome::Aborted: return "Aborted";
    }
    return "?";
}

Snapshot snapshot_of(const GameState& state) {
    return {level(state).value_or(-1), state.min_availability()};
}

GameTrace play_game(const Graph& graph, int k, const Strategy& maker, const Strategy& breaker,
                    std::uint64_t seed, const PlayOptions& options) {
    GameTrace trace;
    trace.header = {options.graph_id, graph.n(), k, maker.descriptor(), breaker.descriptor(), seed};
    GameState state(graph, k);
    Rng maker_rng(mix(seed, 1));
    Rng breaker_rng(mix(seed, 2));
    trace.snapshots.push_back(snapshot_of(state));

    while (true) {
        const auto status = game_status(state);
        if (status.kind == GameStatus::Kind::MakerWon) {
            trace.outcome = Outcome::MakerWon;
            break;
        }
        if (status.kind == GameStatus::Kind::BreakerWon) {
            trace.outcome = Outcome::BreakerWon;
            trace.witness = status.witness;
            break;
        }
        if (options.max_moves >= 0 && static_cast<int>(trace.moves.size()) >= options.max_moves) {
            trace.outcome = Outcome::Truncated;
            break;
        }
        const Player player = state.to_move();
        const Strategy& strategy = player == Player::Maker ? maker : breaker;
        Rng& rng = player == Player::Maker ? maker_rng : breaker_rng;
        MoveChoice move;
        try {
            move = strategy.choose(state, rng);
        } catch (const std::exception& e) {
            trace.outcome = Outcome::Aborted;
            trace.diagnostic = strategy.descriptor() + " failed at t=" + std::to_string(state.t()) + ": " + e.what();
            break;
        }
        if (!state.is_legal(move.v, move.c)) {
            trace.outcome = Outcome::Aborted;
            trace.diagnostic = strategy.descriptor() + " returned illegal move (v=" + std::to_string(move.v) +
                               ", c=" + std::to_string(move.c) + ") at t=" + std::to_string(state.t());
            break;
        }
        trace.moves.push_back({state.t(), player, move.v, move.c});
        state.apply(move.v, move.c);
        trace.snapshots.push_back(snapshot_of(state));
    }
    return trace;
}

GameState replay(const Graph& graph, const GameTrace& trace, int prefix) {
    GameState state(graph, trace.header.k);
    const auto upto = prefix < 0 ? trace.moves.size() : std::min<std::size_t>(trace.moves.size(), static_cast<std::size_t>(prefix));
    for (std::size_t i = 0; i < upto; ++i) state.apply(trace.moves[i].v, trace.moves[i].c);
    return state;
}

bool replay_matches(const Graph& graph, const GameTrace& trace) {
    if (graph.n() != trace.header.n) return false;
    GameState state(graph, trace.header.k);
    if (trace.snapshots.size() != trace.moves.size() + 1) return false;
    if (!(snapshot_of(state) == trace.snapshots[0])) return false;
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        const auto& m = trace.moves[i];
        if (m.t != state.t() || m.player != state.to_move() || !state.is_legal(m.v, m.c)) return false;
        state.apply(m.v, m.c);
        if (!(snapshot_of(state) == trace.snapshots[i + 1])) return false;
    }
    const auto status = game_status(state);
    switch (trace.outcome) {
        case Outcome::MakerWon: return status.kind == GameStatus::Kind::MakerWon;
        case Outcome::BreakerWon:
            return status.kind == GameStatus::Kind::BreakerWon && status.witness == trace.witness;
        default: return status.kind == GameStatus::Kind::Ongoing || trace.outcome == Outcome::Aborted;
    }
}

}  // namespace gcn
