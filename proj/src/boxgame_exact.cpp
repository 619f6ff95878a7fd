#include <algorithm>
#include <map>
#include <set>

#include "gcn/boxgame.hpp"

namespace gcn {

namespace {

// Sizes are kept sorted ascending; every reachable position is a multiset.
class BoxSolver {
public:
    explicit BoxSolver(const BoxInstance& inst) : q_(inst.q), z_(inst.z), d_(inst.d) {}

    bool breaker_wins(std::vector<int> sizes) {
        std::sort(sizes.begin(), sizes.end());
        if (!sizes.empty() && sizes.front() == 0) return true;
        return maker_turn(sizes, z_ - 1);
    }

    std::size_t states() const { return memo_.size(); }

private:
    using Key = std::pair<std::vector<int>, int>;  // (sizes, stolen run); negative run marks Breaker's turn

    static std::vector<int> without_one(const std::vector<int>& sizes, std::size_t i) {
        std::vector<int> out;
        out.reserve(sizes.size() - 1);
        for (std::size_t j = 0; j < sizes.size(); ++j)
            if (j != i) out.push_back(sizes[j]);
        return out;
    }

    bool maker_turn(const std::vector<int>& sizes, int run) {
        if (sizes.empty()) return false;
        const Key key{sizes, run};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool win = false;
        if (run < z_ - 1) {
            for (std::size_t i = 0; i < sizes.size() && !win; ++i) {
                if (i > 0 && sizes[i] == sizes[i - 1]) continue;
                win = breaker_turn(without_one(sizes, i), run + 1);
            }
        }
        // Real move: any set within d of the minimum, chosen adversarially.
        for (std::size_t i = 0; i < sizes.size() && !win && sizes[i] <= sizes.front() + d_; ++i) {
            if (i > 0 && sizes[i] == sizes[i - 1]) continue;
            win = breaker_turn(without_one(sizes, i), 0);
        }
        memo_.emplace(key, win);
        return win;
    }

    bool breaker_turn(const std::vector<int>& sizes, int run) {
        if (sizes.empty()) return false;
        if (sizes.front() <= q_) return true;
        const Key key{sizes, -1 - run};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::set<std::vector<int>> outcomes;
        std::vector<int> current = sizes;
        distribute(current, 0, q_, outcomes);
        bool win = false;
        for (const auto& next : outcomes) {
            if (maker_turn(next, run)) {
                win = true;
                break;
            }
        }
        memo_.emplace(key, win);
        return win;
    }

    // All ways to remove at most `budget` elements; no set can be emptied here.
    void distribute(std::vector<int>& current, std::size_t index, int budget, std::set<std::vector<int>>& out) {
        if (index == current.size() || budget == 0) {
            auto sorted = current;
            std::sort(sorted.begin(), sorted.end());
            out.insert(std::move(sorted));
            return;
        }
        const int original = current[index];
        for (int take = 0; take <= budget && take < original; ++take) {
            current[index] = original - take;
            distribute(current, index + 1, budget - take, out);
        }
        current[index] = original;
    }

    int q_, z_, d_;
    std::map<Key, bool> memo_;
};

}  // namespace

BoxExactResult solve_boxgame_exact(const BoxInstance& instance, int max_elements) {
    validate(instance);
    std::int64_t total = 0;
    for (auto s : instance.sizes) total += s;
    if (total > max_elements)
        throw BudgetExceeded("solve_boxgame_exact: " + std::to_string(total) + " elements exceed budget " +
                             std::to_string(max_elements));
    std::vector<int> sizes(instance.sizes.begin(), instance.sizes.end());
    BoxSolver solver(instance);
    const bool breaker = solver.breaker_wins(sizes);
    return {breaker ? Winner::Breaker : Winner::Maker, solver.states()};
}

}  // namespace gcn
