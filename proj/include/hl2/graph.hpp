#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hl2 {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph in CSR form. Vertex ids are 0..n-1.
// Edges are kept canonically sorted (u < v, lexicographic), which fixes the
// labeling of everything built on top (lifts, spectra, reports).
class Graph {
public:
    Graph() = default;

    // Validates: ids in range, no self-loops, no parallel edges.
    // Edges may arrive in any order/orientation; they are canonicalized.
    static Graph from_edges(int n, std::vector<Edge> edges, std::string label = "");

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    int degree(int v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    std::span<const int> neighbors(int v) const {
        return {adjacency_.data() + offsets_[v],
                static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
    }
    bool has_edge(int u, int v) const;

    // Canonical edge list, sorted lexicographically with u < v.
    const std::vector<Edge>& edges() const { return edges_; }

    bool is_regular() const;
    int min_degree() const;
    int max_degree() const;

    const std::string& label() const { return label_; }
    Graph with_label(std::string label) && {
        label_ = std::move(label);
        return std::move(*this);
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> offsets_ = {0};
    std::vector<int> adjacency_;
    std::string label_;
};

// ---- deterministic generators -------------------------------------------

Graph make_complete(int n);
Graph make_petersen();
Graph make_cycle(int n);

// Pairing (configuration) model with rejection of loops and multi-edges.
// Attempt i draws from Rng(mix_seed(seed, i)); gives up after 1000 attempts.
Graph make_random_regular(int n, int d, std::uint64_t seed);

// Each of the n(n-1)/2 pairs is included independently with probability p,
// scanned in lexicographic order.
Graph make_erdos_renyi(int n, double p, std::uint64_t seed);

// ---- analysis -------------------------------------------------------------

struct Bipartition {
    bool bipartite = false;
    std::vector<std::int8_t> side;  // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;     // closed walk of odd length when not
};
Bipartition is_bipartite(const Graph& g);

struct Components {
    int count = 0;
    std::vector<int> label;  // contiguous from 0 in discovery order
};
Components connected_components(const Graph& g);

// Connected induced subgraph of <= n_max vertices grown by BFS from a
// uniformly sampled start vertex; neighbor order is shuffled per vertex.
// The start vertex maps to subgraph vertex 0.
struct SampledSubgraph {
    Graph graph;
    std::vector<int> to_base;  // subgraph vertex -> base vertex
};
SampledSubgraph bfs_sample(const Graph& g, int n_max, std::uint64_t seed);

// ---- edge-list text format -------------------------------------------------
// First non-comment line "n m", then m lines "u v" with 0 <= u < v < n.
// '#' starts a comment, UTF-8, LF line endings. Serialization emits edges
// sorted lexicographically, so parse(serialize(g)) == g byte-for-byte.

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace hl2
