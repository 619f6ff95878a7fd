#include "gcn/graph.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "gcn/rng.hpp"

namespace gcn {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(std::max(n, 0)), Bitset(static_cast<std::size_t>(std::max(n, 0)))) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    rows_[v].for_each([&](std::size_t u) { out.push_back(static_cast<Vertex>(u)); });
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        rows_[u].for_each([&](std::size_t w) {
            if (static_cast<Vertex>(w) > u) out.emplace_back(u, static_cast<Vertex>(w));
        });
    return out;
}

bool Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("graph: vertex index out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (adjacent(u, v)) return false;
    rows_[u].set(static_cast<std::size_t>(v));
    rows_[v].set(static_cast<std::size_t>(u));
    ++edge_count_;
    return true;
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_gnp: n must be at least 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must lie in [0,1]");
    Graph g(n);
    Rng rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) g.add_edge(u, v);
    return g;
}

std::vector<Vertex> matching_partners(int n) {
    std::vector<Vertex> partner(static_cast<std::size_t>(2 * n));
    for (Vertex i = 0; i < n; ++i) {
        partner[i] = i + n;
        partner[i + n] = i;
    }
    return partner;
}

BipartiteMinusMatching bipartite_minus_matching(int n) {
    if (n < 1) throw std::invalid_argument("bipartite_minus_matching: n must be at least 1");
    Graph g(2 * n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (i != j) g.add_edge(i, n + j);
    return {std::move(g), matching_partners(n)};
}

Graph parse_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphParseError("malformed graph document at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw GraphParseError("graph document must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw GraphParseError("graph document: missing integer field \"n\"");
    const auto n = doc["n"].get<long long>();
    if (n < 0 || n > (1 << 24)) throw GraphParseError("graph document: \"n\" out of range");
    Graph g(static_cast<int>(n));
    if (!doc.contains("edges")) return g;
    const auto& edges = doc["edges"];
    if (!edges.is_array()) throw GraphParseError("graph document: \"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw GraphParseError(where + ": expected a pair of integers");
        const auto u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw GraphParseError(where + ": vertex index out of range");
        if (u == v) throw GraphParseError(where + ": self-loop");
        if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw GraphParseError(where + ": duplicate edge");
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::ordered_json doc;
    doc["n"] = g.n();
    doc["edges"] = std::move(edges);
    return doc.dump();
}

}  // namespace gcn
