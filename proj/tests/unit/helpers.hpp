#pragma once

#include <set>
#include <vector>

#include "gcn/game.hpp"
#include "gcn/graph.hpp"
#include "gcn/rng.hpp"

namespace testing {

inline gcn::Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    gcn::Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline gcn::Graph complete(int n) {
    gcn::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline gcn::Graph path(int n) {
    gcn::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// A(v,C) straight from the definition.
inline std::vector<int> brute_avail(const gcn::Graph& g, const std::vector<int>& color_of, int k, int v) {
    std::set<int> seen;
    for (int u = 0; u < g.n(); ++u)
        if (g.adjacent(u, v) && color_of[u] != 0) seen.insert(color_of[u]);
    std::vector<int> out;
    for (int c = 1; c <= k; ++c)
        if (!seen.count(c)) out.push_back(c);
    return out;
}

// Uniformly random legal move by enumeration, or {-1,0} if none.
inline gcn::MoveChoice random_move(const gcn::GameState& s, gcn::Rng& rng) {
    std::vector<gcn::MoveChoice> all;
    for (int v = 0; v < s.n(); ++v)
        if (!s.is_colored(v))
            for (int c : brute_avail(s.graph(), s.coloring(), s.k(), v)) all.push_back({v, c});
    if (all.empty()) return {};
    return all[rng.below(all.size())];
}

class ScriptedStrategy final : public gcn::Strategy {
public:
    explicit ScriptedStrategy(std::vector<gcn::MoveChoice> moves) : moves_(std::move(moves)) {}
    gcn::MoveChoice choose(const gcn::GameState& s, gcn::Rng&) const override {
        const auto i = static_cast<std::size_t>(s.colored_count() / 2);
        return i < moves_.size() ? moves_[i] : gcn::MoveChoice{};
    }
    std::string descriptor() const override { return "scripted"; }

private:
    std::vector<gcn::MoveChoice> moves_;
};

}  // namespace testing
