#pragma once

#include <cstddef>
#include <stdexcept>

#include "gcn/graph.hpp"

namespace gcn {

enum class Winner { Maker, Breaker };

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExactResult {
    Winner winner = Winner::Maker;
    std::size_t states = 0;  // distinct canonical positions evaluated
};

// Winner of the coloring game on `graph` with k colors under optimal play by
// both sides. Positions are memoised up to permutation of color names.
// Throws BudgetExceeded if graph.n() > vertex_budget; the budget itself is
// capped at 15 vertices.
ExactResult solve_exact(const Graph& graph, int k, int vertex_budget = 12);

}  // namespace gcn
