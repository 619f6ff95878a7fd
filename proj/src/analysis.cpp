#include "gcn/analysis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gcn/rng.hpp"

namespace gcn {

namespace {
// Guards ceilings and comparisons of quantities that are integral or equal in
// exact arithmetic (e.g. 8/0.02 = 400) against floating-point noise.
constexpr double kSlack = 1e-9;
}  // namespace

Constants constants(double alpha) {
    if (!(alpha > 1.0)) throw std::invalid_argument("constants: alpha must exceed 1");
    Constants out;
    out.alpha = alpha;
    out.xi = (1.0 - 1.0 / alpha) / 10.0;
    out.N = static_cast<int>(std::ceil(8.0 / out.xi - kSlack));
    const double target = 1.0 / alpha + 2.0 * out.xi;
    for (int j = 0;; ++j) {
        const double h = 0.5 - out.xi + j * out.xi;
        PhaseConstants ph;
        ph.h = h;
        ph.L = (h + 2.0 * out.xi) / (2.0 * out.xi);
        ph.c = 1.0 / (ph.L + 1.0);
        out.phases.push_back(ph);
        if (h >= target - kSlack) break;
    }
    return out;
}

double log_b_np(int n, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("log_b_np: p must lie in (0,1)");
    if (n < 2) throw std::invalid_argument("log_b_np: n must be at least 2");
    const double np = n * p;
    if (np <= 1.0) throw std::invalid_argument("log_b_np: need np > 1");
    return std::log(np) / -std::log1p(-p);
}

int color_count(int n, double p, double alpha) {
    return static_cast<int>(std::ceil(alpha * n / log_b_np(n, p) - kSlack));
}

RateValues rate_functions(int n, double p, double alpha, double h) {
    const Constants cst = constants(alpha);
    RateValues r;
    r.n = n;
    r.p = p;
    r.alpha = alpha;
    r.h = h;
    r.log_b_np = log_b_np(n, p);
    r.b = 1.0 / (1.0 - p);
    r.k_real = alpha * n / r.log_b_np;
    r.k = color_count(n, p, alpha);
    r.beta = alpha * cst.xi * n * std::pow(n * p, -h) / (10.0 * r.log_b_np);
    const double ln_n = std::log(static_cast<double>(n));
    r.gamma = 10.0 * n * ln_n / r.beta;
    r.q = r.beta / (ln_n * ln_n);
    return r;
}

int greedy_chromatic(const Graph& graph, std::uint64_t seed) {
    const int n = graph.n();
    if (n == 0) return 0;
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);

    std::vector<Bitset> classes;  // vertex set of each color
    for (Vertex v : order) {
        const Bitset& row = graph.row(v);
        std::size_t c = 0;
        while (c < classes.size() && count_and(classes[c], row) > 0) ++c;
        if (c == classes.size()) classes.emplace_back(static_cast<std::size_t>(n));
        classes[c].set(static_cast<std::size_t>(v));
    }
    return static_cast<int>(classes.size());
}

}  // namespace gcn
