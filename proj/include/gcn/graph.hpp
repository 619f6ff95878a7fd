#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcn/bitset.hpp"

namespace gcn {

using Vertex = int;

// Undirected simple graph on vertices 0..n-1 with one adjacency bit row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(static_cast<std::size_t>(v)); }
    const Bitset& row(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return static_cast<int>(rows_[v].count()); }
    int max_degree() const;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    // Returns false if the edge was already present. Throws on self-loops or
    // out-of-range endpoints.
    bool add_edge(Vertex u, Vertex v);

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<Bitset> rows_;
};

// Erdos-Renyi G(n,p). Pairs u < v are sampled in row-major order, one
// uniform01() draw per pair from Rng(seed).
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Complete bipartite graph B_{n,n} minus a perfect matching.
// Side U = {0..n-1}, side W = {n..2n-1}; vertex i is matched with i+n.
struct BipartiteMinusMatching {
    Graph graph;
    std::vector<Vertex> partner;  // partner[v] = matched vertex on the other side
};
BipartiteMinusMatching bipartite_minus_matching(int n);

// Vertex-pairing table for a graph produced by bipartite_minus_matching with 2n vertices.
std::vector<Vertex> matching_partners(int n);

class GraphParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// JSON form {"n": <int>, "edges": [[u,v], ...]}; output uses u < v in
// lexicographic order.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace gcn
