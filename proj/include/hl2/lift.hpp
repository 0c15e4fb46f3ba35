#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hl2/graph.hpp"

namespace hl2 {

// Oriented copy of a base edge: left copy of `from` joined to right copy of `to`.
struct OrientedEdge {
    int from = 0;
    int to = 0;
};

// Bipartite double cover. Vertices 0..n-1 are the left copies, n..2n-1 the
// right copies; every edge joins a left vertex to a right vertex. Edge i of
// cover.edges() originates from base edge {labels[i].from, labels[i].to}.
struct BipartiteCover {
    Graph graph;
    int base_n = 0;
    std::vector<OrientedEdge> labels;  // aligned with graph.edges()

    bool is_left(int v) const { return v < base_n; }
};

BipartiteCover bipartite_double_cover(const Graph& g);

// Line graph: one vertex per edge of b (in canonical edge order), adjacent
// when the edges share an endpoint.
Graph line_graph(const Graph& b);

// Symmetric lift: line graph of the bipartite double cover. Vertex i of the
// lift is cover edge i; vertex_labels[i] records the originating base edge
// and its orientation.
struct Lift {
    Graph graph;
    std::vector<OrientedEdge> vertex_labels;
};

Lift hl2_lift_labeled(const Graph& g);
Graph hl2_lift(const Graph& g);

// One row of a tower summary. Rows beyond the construction budget are
// predicted from the degree sequence (exact one level ahead; closed-form
// recurrence d -> 2d-2, V -> V*d for regular towers).
struct TowerLevel {
    int level = 0;
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    int min_degree = 0;
    int max_degree = 0;
    bool regular = false;
    int components = 0;       // -1 when not constructed
    bool constructed = false;
    bool recurrence_ok = false;  // V_r == 2*E_{r-1}
};

struct Tower {
    std::vector<Graph> graphs;       // constructed levels, [G_0 .. ]
    std::vector<TowerLevel> summary;  // one row per requested level where known
    bool budget_exceeded = false;
};

// Repeated lifting G_0 = g, G_{r+1} = hl2_lift(G_r). Construction stops when
// the predicted next size exceeds max_vertices; remaining rows are predicted
// where the recurrence allows.
Tower hl2_tower(const Graph& g, int levels, std::int64_t max_vertices = 100000);

}  // namespace hl2
