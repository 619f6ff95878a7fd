#include <doctest.h>

#include <cmath>

#include "gcn/analysis.hpp"
#include "gcn/graph.hpp"
#include "gcn/rng.hpp"
#include "helpers.hpp"

using namespace gcn;

TEST_SUITE("analysis") {

TEST_CASE("constants for alpha = 2") {
    auto c = constants(2.0);
    CHECK(c.xi == doctest::Approx(0.05));
    CHECK(c.N == 160);
    CHECK(c.phases.front().h == doctest::Approx(0.45));
    CHECK(c.phases.back().h >= 0.5 + 0.1 - 1e-12);
}

TEST_CASE("constants for alpha = 1.25") {
    auto c = constants(1.25);
    CHECK(c.xi == doctest::Approx(0.02));
    CHECK(c.N == 400);
    CHECK(c.J() == 19);
    CHECK(c.phases.front().h == doctest::Approx(0.48));
    CHECK(c.phases.back().h == doctest::Approx(0.84));
    for (int j = 1; j < c.J(); ++j) CHECK(c.phases[j].h - c.phases[j - 1].h == doctest::Approx(0.02));
    const auto& half = c.phases[1];
    CHECK(half.h == doctest::Approx(0.5));
    CHECK(half.L == doctest::Approx(13.5));
    CHECK(half.c == doctest::Approx(1.0 / 14.5));
}

TEST_CASE("constants reject alpha <= 1") {
    CHECK_THROWS(constants(1.0));
    CHECK_THROWS(constants(0.5));
}

TEST_CASE("phase set ends at the first h reaching 1/alpha + 2 xi") {
    for (double alpha : {1.1, 1.3, 1.5, 2.0, 3.0, 7.0}) {
        auto c = constants(alpha);
        const double xi = (1 - 1 / alpha) / 10;
        const double target = 1 / alpha + 2 * xi;
        CHECK(c.N == static_cast<int>(std::ceil(8 / xi - 1e-9)));
        CHECK(c.phases.back().h >= target - 1e-12);
        if (c.J() > 1) CHECK(c.phases[c.J() - 2].h < target - 1e-12);
    }
}

TEST_CASE("rate functions at n = 1024") {
    auto r = rate_functions(1024, 0.5, 1.25, 0.5);
    CHECK(r.b == doctest::Approx(2.0));
    CHECK(r.log_b_np == doctest::Approx(9.0));
    const double beta = 1.25 * 0.02 * 1024 / std::sqrt(512.0) / 90.0;
    CHECK(r.beta == doctest::Approx(beta).epsilon(1e-12));
    CHECK(r.beta == doctest::Approx(0.012570).epsilon(1e-4));
    CHECK(r.gamma == doctest::Approx(5.647e6).epsilon(1e-3));
    CHECK(r.q == doctest::Approx(2.616e-4).epsilon(1e-3));
    CHECK(r.k == static_cast<int>(std::ceil(1.25 * 1024 / 9.0)));
}

TEST_CASE("rate identities hold exactly") {
    for (int n : {100, 1000, 2000, 50000})
        for (double p : {0.1, 0.5, 0.9})
            for (double h : {0.3, 0.5, 0.8}) {
                auto r = rate_functions(n, p, 1.5, h);
                const double ln = std::log(static_cast<double>(n));
                CHECK(std::abs(r.gamma * r.beta / (10 * n * ln) - 1) < 1e-12);
                CHECK(std::abs(r.q * ln * ln / r.beta - 1) < 1e-12);
            }
}

TEST_CASE("anchors at n = 2000") {
    const double l = log_b_np(2000, 0.5);
    CHECK(2000 / l == doctest::Approx(200.69).epsilon(1e-4));
    CHECK(2000 / (2 * l) == doctest::Approx(100.34).epsilon(1e-4));
    CHECK(color_count(2000, 0.5, 1.0) == 201);
}

TEST_CASE("rate function errors") {
    CHECK_THROWS(rate_functions(10, 0.05, 1.5, 0.5));  // np <= 1
    CHECK_THROWS(rate_functions(100, 0.0, 1.5, 0.5));
    CHECK_THROWS(rate_functions(100, 1.0, 1.5, 0.5));
}

TEST_CASE("greedy chromatic") {
    CHECK(greedy_chromatic(Graph(0), 1) == 0);
    CHECK(greedy_chromatic(Graph(5), 1) == 1);
    CHECK(greedy_chromatic(testing::complete(5), 1) == 5);
    auto bip = bipartite_minus_matching(4);
    CHECK(greedy_chromatic(bip.graph, 7) >= 2);
}

namespace {

// First fit over adjacency lists in the same shuffled order.
int first_fit_oracle(const Graph& g, std::uint64_t seed) {
    const int n = g.n();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<int> color(n, -1);
    int used = 0;
    for (int v : order) {
        std::vector<char> taken(used + 1, 0);
        for (int u : g.neighbors(v))
            if (color[u] >= 0) taken[color[u]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

}  // namespace

TEST_CASE("greedy chromatic matches a first-fit oracle") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        auto g = gen_gnp(150, 0.1 + 0.025 * static_cast<double>(s % 30), mix(3, s));
        CHECK(greedy_chromatic(g, s) == first_fit_oracle(g, s));
    }
    int lo = 1 << 30, hi = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto g = gen_gnp(2000, 0.5, mix(11, s));
        const int x = greedy_chromatic(g, s);
        if (s < 3) CHECK(x == first_fit_oracle(g, s));
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    // First fit lands above n / log_b np = 200.7 at this size.
    CHECK(lo > 201);
    CHECK(hi < 240);
}

TEST_CASE("greedy coloring is proper") {
    // A proper coloring with x colors means x >= clique size: a planted K7 forces at least 7.
    auto g = gen_gnp(200, 0.05, 4);
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
            if (!g.adjacent(u, v)) g.add_edge(u, v);
    for (std::uint64_t s = 0; s < 20; ++s) CHECK(greedy_chromatic(g, s) >= 7);
}

}
