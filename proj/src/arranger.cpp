#include "gcn/arranger.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gcn {

namespace {

int color_universe(const ArrangementInput& input) {
    int k = input.k;
    for (const auto& a : input.avail)
        for (Color c : a) {
            if (c < 1) throw std::invalid_argument("arrangement: colors must be positive");
            if (input.k > 0 && c > input.k) throw std::invalid_argument("arrangement: color exceeds k");
            k = std::max(k, c);
        }
    return k;
}

}  // namespace

ArrangementResult color_arranging(const ArrangementInput& input) {
    if (input.avail.size() != input.U.size()) throw std::invalid_argument("arrangement: one color set per vertex required");
    if (input.q < 1) throw std::invalid_argument("arrangement: q must be at least 1");
    const int k = color_universe(input);
    const std::size_t m = input.U.size();

    // holders[c] = positions j with c in A(U[j]).
    std::vector<std::vector<std::size_t>> holders(static_cast<std::size_t>(k) + 1);
    for (std::size_t j = 0; j < m; ++j)
        for (Color c : input.avail[j]) holders[c].push_back(j);

    std::vector<Color> order = input.color_order;
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(k));
        std::iota(order.begin(), order.end(), 1);
    }

    ArrangementResult result;
    result.S.assign(m, {});
    result.residual.assign(static_cast<std::size_t>(k) + 1, 0);
    const auto q = static_cast<std::size_t>(input.q);
    for (Color c : order) {
        if (c < 1 || c > k) throw std::invalid_argument("arrangement: color order entry out of range");
        auto members = holders[c];
        if (members.size() > q) {
            std::stable_sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
                if (result.S[x].size() != result.S[y].size()) return result.S[x].size() > result.S[y].size();
                return input.U[x] < input.U[y];
            });
            for (std::size_t r = q; r < members.size(); ++r) result.S[members[r]].push_back(c);
            result.residual[c] = static_cast<int>(q);
        } else {
            result.residual[c] = static_cast<int>(members.size());
        }
    }
    for (const auto& s : result.S) result.max_s = std::max(result.max_s, static_cast<int>(s.size()));
    return result;
}

ArrangementReport verify_arrangement(const ArrangementInput& input, const ArrangementResult& result) {
    ArrangementReport report;
    const int k = color_universe(input);
    std::vector<int> residual(static_cast<std::size_t>(k) + 1, 0);
    for (std::size_t j = 0; j < input.U.size(); ++j) {
        std::vector<Color> a = input.avail[j], s = result.S[j];
        std::sort(a.begin(), a.end());
        std::sort(s.begin(), s.end());
        if (!std::includes(a.begin(), a.end(), s.begin(), s.end())) report.subset_ok = false;
        std::vector<Color> rest;
        std::set_difference(a.begin(), a.end(), s.begin(), s.end(), std::back_inserter(rest));
        for (Color c : rest) ++residual[c];
        if (static_cast<int>(s.size()) > input.q) {
            report.size_ok = false;
            report.oversized.push_back(input.U[j]);
        }
    }
    for (Color c = 1; c <= k; ++c)
        if (residual[c] > input.q) {
            report.residual_ok = false;
            report.overfull.push_back(c);
        }
    return report;
}

Cascade wk_cascade(const ArrangementResult& result, double q, double h, double xi) {
    if (!(h > 0 && h < 1 && xi > 0 && xi < 1)) throw std::invalid_argument("wk_cascade: h and xi must lie in (0,1)");
    Cascade out;
    out.L = (h + 2 * xi) / (2 * xi);
    out.c = 1.0 / (out.L + 1.0);
    out.K_floor = static_cast<int>(std::floor(out.L + 1e-9));
    out.K_ceil = static_cast<int>(std::ceil(out.L - 1e-9));
    for (int K = 0; K <= out.K_ceil; ++K) {
        const double threshold = (1.0 - K * out.c) * q;
        int count = 0;
        for (const auto& s : result.S)
            if (static_cast<double>(s.size()) > threshold) ++count;
        out.sizes.emplace_back(K, count);
    }
    return out;
}

Cascade wk_cascade(const ArrangementInput& input, const ArrangementResult& result, double h, double xi) {
    return wk_cascade(result, static_cast<double>(input.q), h, xi);
}

}  // namespace gcn
