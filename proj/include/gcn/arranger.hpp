#pragma once

#include <vector>

#include "gcn/game.hpp"

namespace gcn {

struct ArrangementInput {
    std::vector<Vertex> U;
    std::vector<std::vector<Color>> avail;  // avail[j] = A(U[j], C'), colors in 1..k
    int k = 0;                              // color universe; 0 means max color present
    int q = 1;
    std::vector<Color> color_order;         // processing order; empty means 1..k ascending
};

struct ArrangementResult {
    std::vector<std::vector<Color>> S;  // S[j] for U[j], in insertion order
    std::vector<int> residual;          // residual[c] = |{v : c in A(v) \ S(v)}|, index 0 unused
    int max_s = 0;
};

// Greedy exception-set construction: for each color i in order, if more than
// q vertices offer i, the q with currently largest |S(v)| keep it (ties: smaller
// vertex id) and every other vertex puts i into S(v).
ArrangementResult color_arranging(const ArrangementInput& input);

struct ArrangementReport {
    bool residual_ok = true;  // every color left in at most q sets
    bool size_ok = true;      // every |S(v)| <= q
    bool subset_ok = true;    // every S(v) inside A(v)
    std::vector<Vertex> oversized;    // vertices with |S(v)| > q
    std::vector<Color> overfull;      // colors with residual > q
};
ArrangementReport verify_arrangement(const ArrangementInput& input, const ArrangementResult& result);

struct Cascade {
    double L = 0;
    double c = 0;
    int K_floor = 0;
    int K_ceil = 0;
    std::vector<std::pair<int, int>> sizes;  // (K, |W_K|) for K = 0..K_ceil
};
// W_K = {v in U : |S(v)| > (1 - K c) q}, L = (h + 2 xi) / (2 xi), c = 1/(L+1).
Cascade wk_cascade(const ArrangementInput& input, const ArrangementResult& result, double h, double xi);
// Same with a real-valued threshold q (the rate function q(h)).
Cascade wk_cascade(const ArrangementResult& result, double q, double h, double xi);

}  // namespace gcn
