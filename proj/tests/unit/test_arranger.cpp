#include <doctest.h>

#include <algorithm>

#include "gcn/arranger.hpp"
#include "gcn/rng.hpp"

using namespace gcn;

namespace {

ArrangementInput random_input(Rng& rng) {
    ArrangementInput in;
    const int m = 1 + static_cast<int>(rng.below(25));
    in.k = 1 + static_cast<int>(rng.below(15));
    in.q = 1 + static_cast<int>(rng.below(5));
    for (int j = 0; j < m; ++j) {
        in.U.push_back(static_cast<Vertex>(3 * j + static_cast<int>(rng.below(3))));
        std::vector<Color> a;
        for (Color c = 1; c <= in.k; ++c)
            if (rng.below(3) != 0) a.push_back(c);
        in.avail.push_back(a);
    }
    return in;
}

// Residual multiplicity recounted from A(v) and S(v) directly.
std::vector<int> residual_count(const ArrangementInput& in, const ArrangementResult& r) {
    std::vector<int> count(static_cast<std::size_t>(in.k) + 1, 0);
    for (std::size_t j = 0; j < in.U.size(); ++j)
        for (Color c : in.avail[j])
            if (std::find(r.S[j].begin(), r.S[j].end(), c) == r.S[j].end()) ++count[c];
    return count;
}

}  // namespace

TEST_SUITE("arranger") {

TEST_CASE("hand example") {
    ArrangementInput in{{1, 2, 3}, {{1}, {1, 2}, {1, 2}}, 2, 2, {}};
    auto r = color_arranging(in);
    CHECK(r.S[0].empty());
    CHECK(r.S[1].empty());
    CHECK(r.S[2] == std::vector<Color>{1});
    CHECK(r.residual[1] == 2);
    CHECK(r.residual[2] == 2);
    CHECK(r.max_s == 1);
    auto rep = verify_arrangement(in, r);
    CHECK(rep.residual_ok);
    CHECK(rep.size_ok);
    CHECK(rep.subset_ok);
}

TEST_CASE("no color over the threshold leaves S empty") {
    ArrangementInput in{{0, 1, 2}, {{1, 2}, {2, 3}, {3, 1}}, 3, 2, {}};
    auto r = color_arranging(in);
    for (const auto& s : r.S) CHECK(s.empty());
    CHECK(r.max_s == 0);
}

TEST_CASE("single shared color over q+1 vertices") {
    for (int q = 1; q <= 5; ++q) {
        ArrangementInput in;
        in.q = q;
        for (int j = 0; j <= q; ++j) {
            in.U.push_back(j);
            in.avail.push_back({1});
        }
        auto r = color_arranging(in);
        int with = 0;
        for (const auto& s : r.S) with += s.size() == 1 ? 1 : 0;
        CHECK(with == 1);
        CHECK(r.S[static_cast<std::size_t>(q)] == std::vector<Color>{1});
    }
}

TEST_CASE("adversarial input breaks the size bound") {
    ArrangementInput in{{0, 1}, {{1, 2, 3}, {1, 2, 3}}, 3, 1, {}};
    auto r = color_arranging(in);
    auto rep = verify_arrangement(in, r);
    CHECK(rep.residual_ok);
    CHECK(!rep.size_ok);
    CHECK(rep.oversized == std::vector<Vertex>{1});
    CHECK(r.S[1] == std::vector<Color>{1, 3});
    CHECK(r.S[0] == std::vector<Color>{2});
}

TEST_CASE("residual guarantee on random inputs") {
    Rng rng(1234);
    int bad = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        auto in = random_input(rng);
        auto r = color_arranging(in);
        auto counted = residual_count(in, r);
        for (Color c = 1; c <= in.k; ++c) {
            if (counted[c] > in.q) ++bad;
            if (counted[c] != r.residual[c]) ++bad;
        }
        auto rep = verify_arrangement(in, r);
        if (!rep.residual_ok || !rep.subset_ok) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("vertex list order does not matter") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        auto in = random_input(rng);
        auto shuffled = in;
        std::vector<std::size_t> perm(in.U.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            shuffled.U[i] = in.U[perm[i]];
            shuffled.avail[i] = in.avail[perm[i]];
        }
        auto a = color_arranging(in), b = color_arranging(shuffled);
        for (std::size_t i = 0; i < perm.size(); ++i) CHECK(b.S[i] == a.S[perm[i]]);
    }
}

TEST_CASE("color order override") {
    ArrangementInput in{{0, 1}, {{1, 2}, {1, 2}}, 2, 1, {2, 1}};
    auto r = color_arranging(in);
    CHECK(r.S[1] == std::vector<Color>{2});
    CHECK(r.S[0] == std::vector<Color>{1});
    in.color_order = {5};
    CHECK_THROWS(color_arranging(in));
}

TEST_CASE("cascade constants") {
    ArrangementResult empty;
    empty.S.assign(4, {});
    auto c = wk_cascade(empty, 10.0, 0.5, 0.02);
    CHECK(c.L == doctest::Approx(13.5));
    CHECK(c.c == doctest::Approx(1.0 / 14.5));
    CHECK(c.K_floor == 13);
    CHECK(c.K_ceil == 14);
    REQUIRE(c.sizes.size() == 15);
    for (auto [K, size] : c.sizes) CHECK(size == 0);  // (1 - Kc) q stays positive up to K = 14
    CHECK_THROWS(wk_cascade(empty, 1.0, 0.0, 0.02));
}

TEST_CASE("cascade is nested and W_0 catches oversized sets") {
    Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto in = random_input(rng);
        auto r = color_arranging(in);
        auto c = wk_cascade(in, r, 0.3 + 0.05 * static_cast<double>(trial % 8), 0.05);
        for (std::size_t K = 1; K < c.sizes.size(); ++K) {
            const double prev = (1.0 - static_cast<double>(K - 1) * c.c) * in.q;
            const double cur = (1.0 - static_cast<double>(K) * c.c) * in.q;
            for (const auto& s : r.S)
                if (static_cast<double>(s.size()) > prev) CHECK(static_cast<double>(s.size()) > cur);
            CHECK(c.sizes[K].second >= c.sizes[K - 1].second);
        }
        if (r.max_s > in.q) CHECK(c.sizes[0].second >= 1);
    }
}

}
