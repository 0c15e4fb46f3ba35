#include "hl2/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "hl2/errors.hpp"
#include "hl2/rng.hpp"

namespace hl2 {

Graph Graph::from_edges(int n, std::vector<Edge> edges, std::string label) {
    if (n < 0) throw InvalidParams("vertex count must be >= 0");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidParams("edge endpoint out of range");
        if (u == v) throw InvalidParams("self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidParams("parallel edge");

    Graph g;
    g.n_ = n;
    g.label_ = std::move(label);
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adjacency_.resize(static_cast<std::size_t>(g.offsets_[n]));
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adjacency_[static_cast<std::size_t>(cursor[u]++)] = v;
        g.adjacency_[static_cast<std::size_t>(cursor[v]++)] = u;
    }
    for (int v = 0; v < n; ++v) {
        auto nb = g.adjacency_.begin();
        std::sort(nb + g.offsets_[v], nb + g.offsets_[v + 1]);
    }
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_regular() const { return n_ == 0 || min_degree() == max_degree(); }

int Graph::min_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

// ---- generators -------------------------------------------------------------

Graph make_complete(int n) {
    if (n < 1) throw InvalidParams("make_complete: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges), "complete:" + std::to_string(n));
}

Graph make_petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer 5-cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        edges.push_back({i, 5 + i});                // spokes
    }
    return Graph::from_edges(10, std::move(edges), "petersen");
}

Graph make_cycle(int n) {
    if (n < 3) throw InvalidParams("make_cycle: n must be >= 3");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, std::move(edges), "cycle:" + std::to_string(n));
}

Graph make_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n) throw InvalidParams("make_random_regular: need 0 <= d < n");
    if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw InvalidParams("make_random_regular: n*d must be even");
    const int retry_budget = 1000;
    std::string label = "rr:" + std::to_string(d) + "," + std::to_string(n) + "," +
                        std::to_string(seed);
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < d; ++j) stubs.push_back(v);
        rng.shuffle(stubs);
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph::from_edges(n, std::move(edges), label);
    }
    throw GenerationFailed("make_random_regular: retry budget exhausted for " + label);
}

Graph make_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0) throw InvalidParams("make_erdos_renyi: n must be >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidParams("make_erdos_renyi: p must be in [0,1]");
    Rng rng(mix_seed(seed, 0));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.push_back({u, v});
    std::ostringstream label;
    label << "er:" << n << "," << p << "," << seed;
    return Graph::from_edges(n, std::move(edges), label.str());
}

// ---- analysis -------------------------------------------------------------

Bipartition is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    Bipartition out;
    out.side.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::deque<int> queue;
    for (int root = 0; root < n; ++root) {
        if (out.side[root] != -1) continue;
        out.side[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (out.side[v] == -1) {
                    out.side[v] = static_cast<std::int8_t>(1 - out.side[u]);
                    parent[v] = u;
                    queue.push_back(v);
                } else if (out.side[v] == out.side[u]) {
                    // Odd closed walk: u .. root .. v plus the edge (u,v).
                    std::vector<int> up, vp;
                    for (int x = u; x != -1; x = parent[x]) up.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) vp.push_back(x);
                    // Trim the common tail so the walk closes at the meeting vertex.
                    while (up.size() > 1 && vp.size() > 1 &&
                           up[up.size() - 1] == vp[vp.size() - 1] &&
                           up[up.size() - 2] == vp[vp.size() - 2]) {
                        up.pop_back();
                        vp.pop_back();
                    }
                    out.odd_cycle.assign(up.begin(), up.end());
                    out.odd_cycle.insert(out.odd_cycle.end(), vp.rbegin() + 1, vp.rend());
                    out.bipartite = false;
                    out.side.clear();
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    return out;
}

Components connected_components(const Graph& g) {
    const int n = g.vertex_count();
    Components out;
    out.label.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (out.label[root] != -1) continue;
        out.label[root] = out.count;
        stack.push_back(root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u))
                if (out.label[v] == -1) {
                    out.label[v] = out.count;
                    stack.push_back(v);
                }
        }
        ++out.count;
    }
    return out;
}

SampledSubgraph bfs_sample(const Graph& g, int n_max, std::uint64_t seed) {
    if (n_max < 1) throw InvalidParams("bfs_sample: n_max must be >= 1");
    if (g.vertex_count() == 0) return {Graph{}, {}};
    Rng rng(mix_seed(seed, 0));
    const int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));

    std::vector<int> order;
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue{start};
    new_id[start] = 0;
    order.push_back(start);
    while (!queue.empty() && static_cast<int>(order.size()) < n_max) {
        int u = queue.front();
        queue.pop_front();
        std::vector<int> nb(g.neighbors(u).begin(), g.neighbors(u).end());
        rng.shuffle(nb);
        for (int v : nb) {
            if (new_id[v] != -1) continue;
            new_id[v] = static_cast<int>(order.size());
            order.push_back(v);
            queue.push_back(v);
            if (static_cast<int>(order.size()) >= n_max) break;
        }
    }

    std::vector<Edge> edges;
    for (int u : order)
        for (int v : g.neighbors(u))
            if (new_id[v] != -1 && u < v) edges.push_back({new_id[u], new_id[v]});
    SampledSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(order.size()), std::move(edges),
                                  "bfs_sample(" + g.label() + ")");
    out.to_base = std::move(order);
    return out;
}

// ---- edge-list text -----------------------------------------------------

namespace {

std::string_view strip(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view tok, int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
    int n = -1;
    std::int64_t m = -1;
    std::vector<Edge> edges;
    std::unordered_set<std::int64_t> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        std::size_t sp = line.find_first_of(" \t");
        if (sp == std::string_view::npos) throw ParseError(line_no, "expected two integers");
        std::string_view a = strip(line.substr(0, sp));
        std::string_view b = strip(line.substr(sp));
        int x = 0, y = 0;
        if (!parse_int(a, x) || !parse_int(b, y))
            throw ParseError(line_no, "expected two integers");

        if (n < 0) {
            if (x < 0 || y < 0) throw ParseError(line_no, "negative header values");
            n = x;
            m = y;
            continue;
        }
        if (static_cast<std::int64_t>(edges.size()) >= m)
            throw ParseError(line_no, "more edges than declared");
        if (x == y) throw ParseError(line_no, "self-loop");
        if (x > y) throw ParseError(line_no, "edge not in canonical order (u < v)");
        if (x < 0 || y >= n) throw ParseError(line_no, "vertex id out of range");
        if (!seen.insert(static_cast<std::int64_t>(x) * n + y).second)
            throw ParseError(line_no, "duplicate edge");
        edges.push_back({x, y});
    }
    if (n < 0) throw ParseError(line_no, "missing header line \"n m\"");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    return Graph::from_edges(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) +
                      "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace hl2
