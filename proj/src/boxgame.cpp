#include "gcn/boxgame.hpp"

#include <algorithm>
#include <numeric>

#include "gcn/rng.hpp"

namespace gcn {

void validate(const BoxInstance& instance) {
    if (instance.sizes.empty()) throw std::invalid_argument("box game: need at least one set");
    for (auto s : instance.sizes)
        if (s < 0) throw std::invalid_argument("box game: negative set size");
    if (instance.q < 0) throw std::invalid_argument("box game: q must be non-negative");
    if (instance.z < 1) throw std::invalid_argument("box game: z must be at least 1");
    if (instance.d < 0) throw std::invalid_argument("box game: d must be non-negative");
}

Rational f_bound(int m, int q, int d, int z) {
    if (m < 1) throw std::invalid_argument("f_bound: m must be at least 1");
    Rational harmonic = 0;
    for (int i = 1; i < m; ++i) harmonic += Rational(1, i);
    return Rational(static_cast<long long>(z) * q + d) * m * (1 + harmonic);
}

CriterionResult criterion_holds(std::span<const std::int64_t> sizes, int q, int d, int z) {
    std::vector<std::int64_t> sorted(sizes.begin(), sizes.end());
    std::sort(sorted.begin(), sorted.end());
    const Rational base(static_cast<long long>(z) * q + d);
    Rational harmonic = 0;  // H_{m-1}
    boost::multiprecision::cpp_int prefix = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const int m = static_cast<int>(i) + 1;
        if (m > 1) harmonic += Rational(1, m - 1);
        prefix += sorted[i];
        if (!(Rational(prefix) > base * m * (1 + harmonic))) return {false, m};
    }
    return {true, 0};
}

namespace {

int pick_live(const std::vector<std::int64_t>& size, const std::vector<char>& removed, bool largest) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(size.size()); ++i) {
        if (removed[i]) continue;
        if (best < 0 || (largest ? size[i] > size[best] : size[i] < size[best])) best = i;
    }
    return best;
}

int pick_random_live(const std::vector<char>& removed, Rng& rng) {
    std::vector<int> live;
    for (int i = 0; i < static_cast<int>(removed.size()); ++i)
        if (!removed[i]) live.push_back(i);
    return live.empty() ? -1 : live[rng.below(live.size())];
}

}  // namespace

BoxPlayResult play_boxgame(const BoxInstance& instance, const BoxBreakerPolicy& policy, std::uint64_t seed) {
    validate(instance);
    Rng rng(seed);
    BoxPlayResult result;
    std::vector<std::int64_t> size = instance.sizes;
    std::vector<char> removed(size.size(), 0);
    std::size_t live = size.size();

    for (int i = 0; i < static_cast<int>(size.size()); ++i)
        if (size[i] == 0) {
            result.winner = Winner::Breaker;
            result.emptied_set = i;
            return result;
        }

    auto remove_set = [&](int i, BoxEvent::Kind kind) {
        if (i < 0 || removed[i]) throw BoxPolicyError("box game: claim on a removed set");
        removed[i] = 1;
        --live;
        result.events.push_back({kind, i, 1});
    };

    int stolen_run = instance.z - 1;  // forces the first Maker turn to be real
    while (true) {
        const bool can_steal = stolen_run < instance.z - 1;
        bool steal = false;
        switch (policy.steal) {
            case StealSchedule::Maximal: steal = can_steal; break;
            case StealSchedule::Random: steal = can_steal && rng.below(2) == 1; break;
            case StealSchedule::Never: break;
        }
        if (steal) {
            int target = -1;
            switch (policy.claim) {
                case ClaimPolicy::Largest: target = pick_live(size, removed, true); break;
                case ClaimPolicy::Smallest: target = pick_live(size, removed, false); break;
                case ClaimPolicy::Random: target = pick_random_live(removed, rng); break;
            }
            remove_set(target, BoxEvent::Kind::StolenClaim);
            ++stolen_run;
        } else {
            const int smallest = pick_live(size, removed, false);
            const auto limit = size[smallest] + instance.d;
            int target = -1;
            for (int i = 0; i < static_cast<int>(size.size()); ++i) {
                if (removed[i] || size[i] > limit) continue;
                if (target < 0 || (policy.slack == SlackChoice::Largest ? size[i] > size[target] : size[i] < size[target]))
                    target = i;
            }
            remove_set(target, BoxEvent::Kind::MakerClaim);
            stolen_run = 0;
        }
        if (live == 0) {
            result.winner = Winner::Maker;
            return result;
        }

        const int protected_set = pick_live(size, removed, false);
        for (int e = 0; e < instance.q; ++e) {
            int target = -1;
            switch (policy.elimination) {
                case EliminationPolicy::Smallest: target = pick_live(size, removed, false); break;
                case EliminationPolicy::Largest: target = pick_live(size, removed, true); break;
                case EliminationPolicy::Random: target = pick_random_live(removed, rng); break;
                case EliminationPolicy::Dodge:
                    for (int i = 0; i < static_cast<int>(size.size()); ++i) {
                        if (removed[i] || (i == protected_set && live > 1)) continue;
                        if (target < 0 || size[i] < size[target]) target = i;
                    }
                    break;
            }
            if (target < 0 || removed[target] || size[target] <= 0)
                throw BoxPolicyError("box game: elimination on a removed or empty set");
            --size[target];
            if (!result.events.empty() && result.events.back().kind == BoxEvent::Kind::Eliminate &&
                result.events.back().set == target && e > 0)
                ++result.events.back().amount;
            else
                result.events.push_back({BoxEvent::Kind::Eliminate, target, 1});
            if (size[target] == 0) {
                result.winner = Winner::Breaker;
                result.emptied_set = target;
                return result;
            }
        }
    }
}

BoxInstance from_coloring_endgame(const GameState& before, std::span<const Vertex> U,
                                  const std::vector<std::vector<Color>>& S, int q, int z, int d) {
    if (S.size() != U.size()) throw std::invalid_argument("from_coloring_endgame: S must have one entry per vertex of U");
    BoxInstance inst;
    inst.q = q;
    inst.z = z;
    inst.d = d;
    for (std::size_t j = 0; j < U.size(); ++j) {
        const Vertex v = U[j];
        if (v < 0 || v >= before.n()) throw std::out_of_range("from_coloring_endgame: vertex out of range");
        if (before.is_colored(v))
            throw std::invalid_argument("from_coloring_endgame: vertex " + std::to_string(v) + " is colored at t'");
        std::vector<Color> s = S[j];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("from_coloring_endgame: repeated color in S(v)");
        for (Color c : s)
            if (c < 1 || c > before.k() || !before.is_available(v, c))
                throw std::invalid_argument("from_coloring_endgame: S(" + std::to_string(v) + ") is not a subset of A(v,C')");
        inst.sizes.push_back(before.avail_count(v) - static_cast<std::int64_t>(s.size()));
    }
    return inst;
}

BoxInstance from_coloring_endgame(const Graph& graph, const GameTrace& trace, int t_prime, std::span<const Vertex> U,
                                  const std::vector<std::vector<Color>>& S, int q, int z, int d) {
    if (t_prime < 1) throw std::invalid_argument("from_coloring_endgame: t' must be at least 1");
    const GameState before = replay(graph, trace, t_prime - 1);
    return from_coloring_endgame(before, U, S, q, z, d);
}

std::string to_string(EliminationPolicy p) {
    switch (p) {
        case EliminationPolicy::Smallest: return "smallest";
        case EliminationPolicy::Dodge: return "dodge";
        case EliminationPolicy::Random: return "random";
        case EliminationPolicy::Largest: return "largest";
    }
    return "?";
}

std::string to_string(ClaimPolicy p) {
    switch (p) {
        case ClaimPolicy::Largest: return "largest";
        case ClaimPolicy::Smallest: return "smallest";
        case ClaimPolicy::Random: return "random";
    }
    return "?";
}

std::string to_string(StealSchedule s) {
    switch (s) {
        case StealSchedule::Maximal: return "maximal";
        case StealSchedule::Random: return "random";
        case StealSchedule::Never: return "never";
    }
    return "?";
}

EliminationPolicy parse_elimination_policy(const std::string& s) {
    for (auto p : {EliminationPolicy::Smallest, EliminationPolicy::Dodge, EliminationPolicy::Random, EliminationPolicy::Largest})
        if (to_string(p) == s) return p;
    throw std::invalid_argument("unknown elimination policy '" + s + "'");
}

ClaimPolicy parse_claim_policy(const std::string& s) {
    for (auto p : {ClaimPolicy::Largest, ClaimPolicy::Smallest, ClaimPolicy::Random})
        if (to_string(p) == s) return p;
    throw std::invalid_argument("unknown claim policy '" + s + "'");
}

StealSchedule parse_steal_schedule(const std::string& s) {
    for (auto p : {StealSchedule::Maximal, StealSchedule::Random, StealSchedule::Never})
        if (to_string(p) == s) return p;
    throw std::invalid_argument("unknown steal schedule '" + s + "'");
}

}  // namespace gcn
