#pragma once

#include <cstdint>
#include <vector>

#include "gcn/graph.hpp"

namespace gcn {

struct PhaseConstants {
    double h = 0;
    double L = 0;  // (h + 2 xi) / (2 xi)
    double c = 0;  // 1 / (L + 1)
};

// Strategy constants for a given alpha > 1:
//   xi = (1 - 1/alpha) / 10, N = ceil(8/xi),
//   H = {h_1 = 1/2 - xi, h_j = h_{j-1} + xi, ..., h_J}, J minimal with h_J >= 1/alpha + 2 xi.
struct Constants {
    double alpha = 0;
    double xi = 0;
    int N = 0;
    std::vector<PhaseConstants> phases;
    int J() const { return static_cast<int>(phases.size()); }
};
Constants constants(double alpha);

// log_b(np) with b = 1/(1-p); natural logs throughout.
double log_b_np(int n, double p);
// k = ceil(alpha n / log_b np).
int color_count(int n, double p, double alpha);

struct RateValues {
    int n = 0;
    double p = 0;
    double alpha = 0;
    double h = 0;
    double b = 0;
    double log_b_np = 0;
    double k_real = 0;  // alpha n / log_b np
    int k = 0;
    double beta = 0;   // alpha xi n (np)^{-h} / (10 log_b np)
    double gamma = 0;  // 10 n ln n / beta
    double q = 0;      // beta / (ln n)^2
};
RateValues rate_functions(int n, double p, double alpha, double h);

// First-fit coloring in a uniformly random vertex order; returns colors used.
int greedy_chromatic(const Graph& graph, std::uint64_t seed);

}  // namespace gcn
