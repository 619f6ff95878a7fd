#include "gcn/strategies.hpp"

#include <climits>
#include <sstream>

namespace gcn {

namespace {

void require_maker_turn(const GameState& state) {
    if (state.to_move() != Player::Maker) throw std::logic_error("maker strategy called on Breaker's turn");
}

Vertex min_availability_vertex(const GameState& state) {
    const int m = state.min_availability();
    if (m <= 0) throw std::logic_error("no legal move: a vertex has no available color");
    return static_cast<Vertex>(state.with_availability(m).find_first());
}

Color smallest_class_color(const GameState& state, Vertex v) {
    Color best = kUncolored;
    state.available(v).for_each([&](std::size_t bit) {
        const auto c = static_cast<Color>(bit + 1);
        if (best == kUncolored || state.class_size(c) < state.class_size(best)) best = c;
    });
    return best;
}

MoveChoice first_type_move(const GameState& state, PhasedMakerConfig::FirstColor rule) {
    const Vertex v = min_availability_vertex(state);
    const Color c = rule == PhasedMakerConfig::FirstColor::SmallestClass
                        ? smallest_class_color(state, v)
                        : static_cast<Color>(state.available(v).find_first() + 1);
    return {v, c};
}

MoveChoice second_type_move(const GameState& state, PhasedMakerConfig::SecondVertex rule) {
    Color best = kUncolored;
    for (Color c = 1; c <= state.k(); ++c)
        if (state.is_active(c) && (best == kUncolored || state.class_size(c) < state.class_size(best))) best = c;
    if (best == kUncolored) throw std::logic_error("no legal move: no active color");
    const Bitset& carriers = state.carriers(best);
    if (rule == PhasedMakerConfig::SecondVertex::SmallestIndex)
        return {static_cast<Vertex>(carriers.find_first()), best};
    Vertex target = -1;
    carriers.for_each([&](std::size_t w) {
        const auto v = static_cast<Vertex>(w);
        if (target < 0 || state.avail_count(v) < state.avail_count(target)) target = v;
    });
    return {target, best};
}

// Uniform legal (vertex, color) pair.
MoveChoice random_legal_move(const GameState& state, Rng& rng) {
    std::uint64_t total = 0;
    state.uncolored().for_each([&](std::size_t v) { total += static_cast<std::uint64_t>(state.avail_count(static_cast<Vertex>(v))); });
    if (total == 0) throw std::logic_error("no legal move");
    std::uint64_t r = rng.below(total);
    MoveChoice out;
    state.uncolored().for_each([&](std::size_t w) {
        if (out.v >= 0) return;
        const auto v = static_cast<Vertex>(w);
        const auto a = static_cast<std::uint64_t>(state.avail_count(v));
        if (r < a) {
            std::size_t bit = state.available(v).find_first();
            for (std::uint64_t i = 0; i < r; ++i) bit = state.available(v).find_next(bit + 1);
            out = {v, static_cast<Color>(bit + 1)};
        } else {
            r -= a;
        }
    });
    return out;
}

MoveChoice color_hog_move(const GameState& state) {
    Color best = kUncolored;
    for (Color c = 1; c <= state.k(); ++c)
        if (state.is_active(c) && (best == kUncolored || state.class_size(c) > state.class_size(best))) best = c;
    if (best == kUncolored) throw std::logic_error("no legal move: no active color");
    Vertex target = -1;
    state.carriers(best).for_each([&](std::size_t w) {
        const auto v = static_cast<Vertex>(w);
        if (target < 0 || state.uncolored_degree(v) > state.uncolored_degree(target)) target = v;
    });
    return {target, best};
}

MoveChoice min_avail_attack(const GameState& state, Rng& rng) {
    std::uint64_t total = 0;
    state.uncolored().for_each([&](std::size_t v) { total += static_cast<std::uint64_t>(state.avail_count(static_cast<Vertex>(v))); });
    if (total == 0) throw std::logic_error("no legal move");
    std::vector<MoveChoice> candidates;
    if (total <= kMinAvailCandidates) {
        state.uncolored().for_each([&](std::size_t w) {
            const auto v = static_cast<Vertex>(w);
            state.available(v).for_each([&](std::size_t bit) { candidates.push_back({v, static_cast<Color>(bit + 1)}); });
        });
    } else {
        candidates.reserve(kMinAvailCandidates);
        for (std::size_t i = 0; i < kMinAvailCandidates; ++i) candidates.push_back(random_legal_move(state, rng));
    }
    MoveChoice best = candidates.front();
    LookaheadScore best_score{INT_MAX, 0};
    bool first = true;
    for (const auto& mv : candidates) {
        const auto s = evaluate_move(state, mv.v, mv.c);
        if (first || s.min_avail < best_score.min_avail ||
            (s.min_avail == best_score.min_avail && s.count_at_min > best_score.count_at_min)) {
            best = mv;
            best_score = s;
            first = false;
        }
    }
    return best;
}

}  // namespace

LookaheadScore evaluate_move(const GameState& state, Vertex v, Color c) {
    const int m = state.min_availability();
    if (m < 0) return {INT_MAX, 0};
    const Bitset& row = state.graph().row(v);
    const Bitset& carriers = state.carriers(c);
    const int av = state.avail_count(v);
    const int k = state.k();
    auto affected = [&](int x) -> int {
        if (x < 0 || x > k) return 0;
        return static_cast<int>(count_and(state.with_availability(x), row, carriers));
    };
    // New bucket x = old bucket x, minus v itself, minus neighbours dropping
    // out of x, plus neighbours dropping in from x+1.
    int aff_here = affected(std::max(m - 1, 0));
    for (int x = std::max(m - 1, 0); x <= k; ++x) {
        const int aff_above = affected(x + 1);
        const int cnt = state.count_with_availability(x) - (av == x ? 1 : 0) - aff_here + aff_above;
        if (cnt > 0) return {x, cnt};
        aff_here = aff_above;
    }
    return {INT_MAX, 0};
}

MoveChoice maker_phased(const GameState& state, const PhasedMakerConfig& config) {
    require_maker_turn(state);
    if (config.N < 1) throw std::invalid_argument("maker_phased: N must be at least 1");
    if (is_first_type(state.t(), config.N)) return first_type_move(state, config.first_color);
    return second_type_move(state, config.second_vertex);
}

MoveChoice maker_greedy(const GameState& state) {
    require_maker_turn(state);
    return first_type_move(state, PhasedMakerConfig::FirstColor::SmallestClass);
}

MoveChoice breaker_move(BreakerKind kind, const GameState& state, Rng& rng) {
    switch (kind) {
        case BreakerKind::Random: return random_legal_move(state, rng);
        case BreakerKind::ColorHog: return color_hog_move(state);
        case BreakerKind::MinAvailAttack: return min_avail_attack(state, rng);
    }
    throw std::invalid_argument("breaker_move: unknown kind");
}

MoveChoice breaker_matching(const GameState& state, const std::vector<Vertex>& partner, Rng& rng) {
    if (partner.size() != static_cast<std::size_t>(state.n()))
        throw std::invalid_argument("breaker_matching: matching table does not fit the graph");
    if (const auto last = state.last_move()) {
        const Vertex w = partner[last->v];
        if (w >= 0 && !state.is_colored(w) && state.is_available(w, last->c)) return {w, last->c};
    }
    return min_avail_attack(state, rng);
}

PhasedMakerStrategy::PhasedMakerStrategy(PhasedMakerConfig config) : config_(config) {
    if (config_.N < 1) throw std::invalid_argument("paper strategy: N must be at least 1");
}

std::string PhasedMakerStrategy::descriptor() const {
    std::string out = "paper:N=" + std::to_string(config_.N);
    if (config_.first_color == PhasedMakerConfig::FirstColor::SmallestIndex) out += ",color=index";
    if (config_.second_vertex == PhasedMakerConfig::SecondVertex::SmallestIndex) out += ",vertex=index";
    return out;
}

std::string BreakerStrategy::descriptor() const {
    switch (kind_) {
        case BreakerKind::Random: return "random";
        case BreakerKind::ColorHog: return "colorhog";
        case BreakerKind::MinAvailAttack: return "minavail";
    }
    return "?";
}

MatchingBreakerStrategy::MatchingBreakerStrategy(std::vector<Vertex> partner) : partner_(std::move(partner)) {
    if (partner_.empty()) throw std::invalid_argument("matching strategy: missing matching table");
}

std::unique_ptr<Strategy> make_strategy(std::string_view descriptor, const std::vector<Vertex>* partner) {
    const std::string d(descriptor);
    if (d == "greedy") return std::make_unique<MakerGreedyStrategy>();
    if (d == "random") return std::make_unique<BreakerStrategy>(BreakerKind::Random);
    if (d == "colorhog") return std::make_unique<BreakerStrategy>(BreakerKind::ColorHog);
    if (d == "minavail") return std::make_unique<BreakerStrategy>(BreakerKind::MinAvailAttack);
    if (d == "matching") {
        if (!partner) throw std::invalid_argument("strategy 'matching' needs a matching table (bipartite graph)");
        return std::make_unique<MatchingBreakerStrategy>(*partner);
    }
    if (d.rfind("paper", 0) == 0) {
        PhasedMakerConfig cfg;
        if (d.size() > 5) {
            if (d[5] != ':') throw std::invalid_argument("bad strategy descriptor '" + d + "'");
            std::stringstream ss(d.substr(6));
            std::string item;
            while (std::getline(ss, item, ',')) {
                const auto eq = item.find('=');
                if (eq == std::string::npos) throw std::invalid_argument("bad strategy option '" + item + "'");
                const auto key = item.substr(0, eq), val = item.substr(eq + 1);
                if (key == "N") {
                    std::size_t used = 0;
                    int n = 0;
                    try {
                        n = std::stoi(val, &used);
                    } catch (const std::exception&) {
                        used = 0;
                    }
                    if (used != val.size() || n < 1) throw std::invalid_argument("bad N in '" + d + "'");
                    cfg.N = n;
                } else if (key == "color" && (val == "class" || val == "index")) {
                    cfg.first_color = val == "class" ? PhasedMakerConfig::FirstColor::SmallestClass
                                                     : PhasedMakerConfig::FirstColor::SmallestIndex;
                } else if (key == "vertex" && (val == "mina" || val == "index")) {
                    cfg.second_vertex = val == "mina" ? PhasedMakerConfig::SecondVertex::MinAvailability
                                                      : PhasedMakerConfig::SecondVertex::SmallestIndex;
                } else {
                    throw std::invalid_argument("bad strategy option '" + item + "'");
                }
            }
        }
        return std::make_unique<PhasedMakerStrategy>(cfg);
    }
    throw std::invalid_argument("unknown strategy '" + d + "'");
}

}  // namespace gcn
