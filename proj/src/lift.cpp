#include "hl2/lift.hpp"

#include <algorithm>

#include "hl2/errors.hpp"

namespace hl2 {

BipartiteCover bipartite_double_cover(const Graph& g) {
    const int n = g.vertex_count();
    BipartiteCover out;
    out.base_n = n;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(2 * g.edge_count()));
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({u, n + v});  // u' - v''
        edges.push_back({v, n + u});  // v' - u''
    }
    out.graph = Graph::from_edges(2 * n, std::move(edges), "cover(" + g.label() + ")");
    // Cover edges are already canonical (left id < n <= right id), so the
    // graph's sorted edge order determines the label order.
    out.labels.resize(out.graph.edges().size());
    for (std::size_t i = 0; i < out.graph.edges().size(); ++i) {
        const auto& [l, r] = out.graph.edges()[i];
        out.labels[i] = {l, r - n};
    }
    return out;
}

Graph line_graph(const Graph& b) {
    const auto& base_edges = b.edges();
    const int ln = static_cast<int>(base_edges.size());
    // Index edges by endpoint; edges sharing an endpoint form a clique.
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(b.vertex_count()));
    for (int i = 0; i < ln; ++i) {
        incident[base_edges[i].first].push_back(i);
        incident[base_edges[i].second].push_back(i);
    }
    std::vector<Edge> edges;
    for (const auto& ids : incident)
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t c = a + 1; c < ids.size(); ++c)
                edges.push_back({std::min(ids[a], ids[c]), std::max(ids[a], ids[c])});
    // Two distinct edges of a simple graph share at most one endpoint, so no
    // pair is emitted twice.
    return Graph::from_edges(ln, std::move(edges), "line(" + b.label() + ")");
}

Lift hl2_lift_labeled(const Graph& g) {
    if (g.edge_count() == 0) throw EmptyGraph("hl2_lift: graph has no edges");
    BipartiteCover cover = bipartite_double_cover(g);
    Lift out;
    out.graph = line_graph(cover.graph);
    out.vertex_labels = std::move(cover.labels);
    std::string label = g.label().empty() ? "graph" : g.label();
    out.graph = Graph::from_edges(out.graph.vertex_count(), out.graph.edges(),
                                  "hl2(" + label + ")");
    return out;
}

Graph hl2_lift(const Graph& g) { return hl2_lift_labeled(g).graph; }

namespace {

TowerLevel constructed_row(int level, const Graph& g, std::int64_t prev_edges) {
    TowerLevel row;
    row.level = level;
    row.vertices = g.vertex_count();
    row.edges = g.edge_count();
    row.min_degree = g.min_degree();
    row.max_degree = g.max_degree();
    row.regular = g.is_regular();
    row.components = connected_components(g).count;
    row.constructed = true;
    row.recurrence_ok = level == 0 || row.vertices == 2 * prev_edges;
    return row;
}

// Lift sizes from the degree sequence alone: V' = 2m and
// E' = sum over cover vertices of C(deg, 2) = 2 * sum_v C(deg_G(v), 2).
std::pair<std::int64_t, std::int64_t> predicted_sizes(const Graph& g) {
    std::int64_t pairs = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::int64_t d = g.degree(v);
        pairs += d * (d - 1) / 2;
    }
    return {2 * g.edge_count(), 2 * pairs};
}

}  // namespace

Tower hl2_tower(const Graph& g, int levels, std::int64_t max_vertices) {
    if (levels < 0) throw InvalidParams("hl2_tower: levels must be >= 0");
    Tower tower;
    tower.graphs.push_back(g);
    tower.summary.push_back(constructed_row(0, g, 0));
    for (int r = 1; r <= levels; ++r) {
        const Graph& cur = tower.graphs.back();
        if (cur.edge_count() == 0) throw EmptyGraph("hl2_tower: level " +
                                                    std::to_string(r - 1) + " has no edges");
        auto [pv, pe] = predicted_sizes(cur);
        if (pv > max_vertices) {
            tower.budget_exceeded = true;
            // Predicted rows: exact one level ahead from the degree sequence,
            // then the closed-form recurrence while the tower stays regular.
            TowerLevel row;
            row.level = r;
            row.vertices = pv;
            row.edges = pe;
            row.regular = cur.is_regular();
            row.min_degree = row.regular ? 2 * cur.min_degree() - 2 : 0;
            row.max_degree = row.regular ? 2 * cur.max_degree() - 2 : 0;
            row.components = -1;
            row.recurrence_ok = true;
            tower.summary.push_back(row);
            if (row.regular) {
                std::int64_t v = pv;
                int d = row.min_degree;
                for (int rr = r + 1; rr <= levels; ++rr) {
                    v = v * d;  // V_{r+1} = 2 E_r = V_r * d_r
                    d = 2 * d - 2;
                    TowerLevel next;
                    next.level = rr;
                    next.vertices = v;
                    next.edges = v * d / 2;
                    next.min_degree = next.max_degree = d;
                    next.regular = true;
                    next.components = -1;
                    next.recurrence_ok = true;
                    tower.summary.push_back(next);
                }
            }
            break;
        }
        Lift lift = hl2_lift_labeled(cur);
        tower.graphs.push_back(std::move(lift.graph));
        tower.summary.push_back(constructed_row(r, tower.graphs.back(), cur.edge_count()));
    }
    return tower;
}

}  // namespace hl2
