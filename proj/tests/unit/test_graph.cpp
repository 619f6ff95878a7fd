#include <doctest.h>

#include <cmath>
#include <random>

#include "gcn/graph.hpp"
#include "helpers.hpp"

using namespace gcn;

TEST_SUITE("graph") {

TEST_CASE("gen_gnp degenerate probabilities") {
    auto empty = gen_gnp(5, 0.0, 7);
    CHECK(empty.edge_count() == 0);
    auto full = gen_gnp(5, 1.0, 7);
    CHECK(full.edge_count() == 10);
    CHECK(full == testing::complete(5));
}

TEST_CASE("gen_gnp rejects bad arguments") {
    CHECK_THROWS(gen_gnp(0, 0.5, 1));
    CHECK_THROWS(gen_gnp(5, -0.1, 1));
    CHECK_THROWS(gen_gnp(5, 1.5, 1));
}

TEST_CASE("gen_gnp matches a reference sampler with the pinned generator") {
    // mt19937_64, 53-bit uniform doubles, pairs u < v row-major.
    for (std::uint64_t seed : {1ULL, 42ULL, 0xdeadbeefULL}) {
        const int n = 60;
        const double p = 0.3;
        std::mt19937_64 eng(seed);
        Graph ref(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (static_cast<double>(eng() >> 11) * 0x1.0p-53 < p) ref.add_edge(u, v);
        CHECK(gen_gnp(n, p, seed) == ref);
    }
}

TEST_CASE("gen_gnp is deterministic and symmetric") {
    auto a = gen_gnp(2000, 0.5, 99);
    auto b = gen_gnp(2000, 0.5, 99);
    CHECK(a == b);
    CHECK(!(a == gen_gnp(2000, 0.5, 100)));
    std::size_t pairs = 0;
    bool ok = true;
    for (int u = 0; u < a.n(); ++u) {
        ok = ok && !a.adjacent(u, u);
        for (int v = u + 1; v < a.n(); ++v) {
            ok = ok && (a.adjacent(u, v) == a.adjacent(v, u));
            pairs += a.adjacent(u, v);
        }
    }
    CHECK(ok);
    CHECK(pairs == a.edge_count());
}

TEST_CASE("gen_gnp edge counts stay within four standard deviations") {
    const int n = 1000;
    const double mean = n * (n - 1) * 0.5 / 2;
    const double sd = std::sqrt(n * (n - 1) / 2.0 * 0.25);
    int outside = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const double e = static_cast<double>(gen_gnp(n, 0.5, s).edge_count());
        if (std::abs(e - mean) > 4 * sd) ++outside;
    }
    CHECK(mean == 249750);
    CHECK(4 * sd == doctest::Approx(1413.6).epsilon(1e-3));
    CHECK(outside == 0);
}

TEST_CASE("bipartite_minus_matching small cases") {
    auto b1 = bipartite_minus_matching(1);
    CHECK(b1.graph.n() == 2);
    CHECK(b1.graph.edge_count() == 0);
    auto b2 = bipartite_minus_matching(2);
    CHECK(b2.graph.edge_count() == 2);
    CHECK(b2.graph.adjacent(0, 3));
    CHECK(b2.graph.adjacent(1, 2));
    CHECK(!b2.graph.adjacent(0, 2));
    auto b3 = bipartite_minus_matching(3);
    CHECK(b3.graph.n() == 6);
    CHECK(b3.graph.edge_count() == 6);
    CHECK(b3.partner == std::vector<Vertex>{3, 4, 5, 0, 1, 2});
    CHECK(matching_partners(3) == b3.partner);
}

TEST_CASE("bipartite_minus_matching is triangle-free and regular") {
    for (int n = 2; n <= 12; ++n) {
        auto g = bipartite_minus_matching(n).graph;
        CHECK(g.edge_count() == static_cast<std::size_t>(n * n - n));
        for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == n - 1);
        bool triangle = false;
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                for (int w = v + 1; w < g.n(); ++w)
                    triangle = triangle || (g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w));
        CHECK(!triangle);
    }
}

TEST_CASE("parse and serialize") {
    auto g = parse_graph(R"({"n":2,"edges":[[0,1]]})");
    CHECK(g.n() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(serialize_graph(g) == R"({"n":2,"edges":[[0,1]]})");
    auto r = gen_gnp(10, 0.5, 1);
    CHECK(parse_graph(serialize_graph(r)) == r);
    CHECK(parse_graph(R"({"n":3,"edges":[[2,0]]})").adjacent(0, 2));
}

TEST_CASE("parse errors name the problem") {
    auto message = [](std::string_view text) {
        try {
            parse_graph(text);
        } catch (const GraphParseError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message(R"({"n":3,"edges":[[0,0]]})").find("self-loop") != std::string::npos);
    CHECK(message(R"({"n":3,"edges":[[0,1],[1,0]]})").find("duplicate") != std::string::npos);
    CHECK(message(R"({"n":3,"edges":[[0,1],[1,0]]})").find("edges[1]") != std::string::npos);
    CHECK(message(R"({"n":3,"edges":[[0,3]]})").find("out of range") != std::string::npos);
    CHECK(!message(R"({"n":3,"edges":[[0,1)").empty());
    CHECK(!message(R"({"edges":[]})").empty());
}

}
