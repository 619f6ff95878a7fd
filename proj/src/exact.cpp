#include "gcn/exact.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

namespace gcn {

namespace {

constexpr int kMaxVertices = 15;

// Position = 4-bit color label per vertex, labels canonical (first use in
// vertex order gets 1, the next new color 2, ...). Unused colors are all
// equivalent, so only the lowest fresh label is ever tried.
class Solver {
public:
    Solver(const Graph& g, int k) : n_(g.n()), k_(k) {
        for (int v = 0; v < n_; ++v) {
            std::uint32_t m = 0;
            for (int u = 0; u < n_; ++u)
                if (g.adjacent(u, v)) m |= 1U << u;
            adj_[v] = m;
        }
    }

    bool maker_wins() {
        std::array<std::uint8_t, kMaxVertices> colors{};
        return solve(colors, 0);
    }

    std::size_t states() const { return memo_.size(); }

private:
    static std::uint64_t encode(const std::array<std::uint8_t, kMaxVertices>& colors) {
        std::uint64_t key = 0;
        for (int v = kMaxVertices - 1; v >= 0; --v) key = (key << 4) | colors[v];
        return key;
    }

    static std::array<std::uint8_t, kMaxVertices> canonical(const std::array<std::uint8_t, kMaxVertices>& colors, int n) {
        std::array<std::uint8_t, kMaxVertices + 1> relabel{};
        std::uint8_t next = 1;
        std::array<std::uint8_t, kMaxVertices> out{};
        for (int v = 0; v < n; ++v) {
            const auto c = colors[v];
            if (c == 0) continue;
            if (relabel[c] == 0) relabel[c] = next++;
            out[v] = relabel[c];
        }
        return out;
    }

    // Bitmask of labels 1..used (bit c-1) present in v's neighbourhood.
    std::uint32_t blocked(const std::array<std::uint8_t, kMaxVertices>& colors, int v) const {
        std::uint32_t mask = 0, nb = adj_[v];
        while (nb) {
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (colors[u]) mask |= 1U << (colors[u] - 1);
        }
        return mask;
    }

    bool solve(const std::array<std::uint8_t, kMaxVertices>& colors, int colored) {
        if (colored == n_) return true;
        int used = 0;
        for (int v = 0; v < n_; ++v) used = std::max<int>(used, colors[v]);
        const std::uint32_t used_mask = used == 0 ? 0 : ((1U << used) - 1);
        // A fresh label is available everywhere while used < k.
        if (used >= k_) {
            for (int v = 0; v < n_; ++v)
                if (!colors[v] && (blocked(colors, v) & used_mask) == used_mask) return false;
        }
        const auto key = encode(colors);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const bool maker_turn = colored % 2 == 0;
        const int max_label = std::min(k_, used + 1);
        bool result = !maker_turn;
        for (int v = 0; v < n_ && result == !maker_turn; ++v) {
            if (colors[v]) continue;
            const auto block = blocked(colors, v);
            for (int c = 1; c <= max_label; ++c) {
                if (block & (1U << (c - 1))) continue;
                auto next = colors;
                next[v] = static_cast<std::uint8_t>(c);
                const bool child = solve(canonical(next, n_), colored + 1);
                if (maker_turn && child) {
                    result = true;
                    break;
                }
                if (!maker_turn && !child) {
                    result = false;
                    break;
                }
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    int n_;
    int k_;
    std::array<std::uint32_t, kMaxVertices> adj_{};
    std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

ExactResult solve_exact(const Graph& graph, int k, int vertex_budget) {
    if (k < 1) throw std::invalid_argument("solve_exact: k must be at least 1");
    const int budget = std::min(vertex_budget, kMaxVertices);
    if (graph.n() > budget)
        throw BudgetExceeded("solve_exact: graph has " + std::to_string(graph.n()) + " vertices, budget is " +
                             std::to_string(budget));
    Solver solver(graph, k);
    const bool maker = solver.maker_wins();
    return {maker ? Winner::Maker : Winner::Breaker, solver.states()};
}

}  // namespace gcn
