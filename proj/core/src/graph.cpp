/*
 * Copyright (c) 2026, the ldsx authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 */
#include "lds/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "lds/errors.hpp"

namespace lds {

Graph Graph::from_edges(VertexId n, std::vector<Edge> edges, std::vector<std::string> labels) {
    Graph g;
    g.n_ = n;
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) throw ArgumentError("Graph::from_edges: endpoint out of range");
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }),
                edges.end());
    std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
    g.edges_ = std::move(edges);

    std::vector<std::int64_t> deg(n, 0);
    for (const Edge& e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.adj_offsets_.assign(n + 1, 0);
    for (VertexId u = 0; u < n; ++u) g.adj_offsets_[u + 1] = g.adj_offsets_[u] + deg[u];
    g.adj_.resize(g.adj_offsets_[n]);
    std::vector<std::int64_t> cursor(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.adj_[cursor[e.u]++] = e.v;
        g.adj_[cursor[e.v]++] = e.u;
    }
    for (VertexId u = 0; u < n; ++u)
        std::sort(g.adj_.begin() + g.adj_offsets_[u], g.adj_.begin() + g.adj_offsets_[u + 1]);

    if (labels.empty()) {
        labels.reserve(n);
        for (VertexId u = 0; u < n; ++u) labels.push_back(std::to_string(u));
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph load_edge_list(std::istream& in, LoadStats* stats) {
    LoadStats local;
    std::unordered_map<std::string, VertexId> id_of;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::string line;
    std::int64_t line_no = 0;

    auto intern = [&](const std::string& token) -> VertexId {
        auto [it, inserted] = id_of.emplace(token, static_cast<VertexId>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::int64_t raw_self_loops = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') {
            ++local.comment_lines;
            continue;
        }
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw ParseError("load_edge_list: line " + std::to_string(line_no) +
                             ": expected exactly two tokens");
        }
        const VertexId u = intern(a);
        const VertexId v = intern(b);
        if (u == v) {
            ++raw_self_loops;
            continue;
        }
        edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
    }

    const std::int64_t raw_edges = static_cast<std::int64_t>(edges.size());
    Graph g = Graph::from_edges(static_cast<VertexId>(labels.size()), std::move(edges),
                                std::move(labels));
    local.self_loops_dropped = raw_self_loops;
    local.duplicates_dropped = raw_edges - g.edge_count();
    if (stats) *stats = local;
    return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count())
            throw ArgumentError("induced_subgraph: member out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw ArgumentError("induced_subgraph: members must be strictly increasing");
    }
    std::vector<VertexId> local_of(g.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) local_of[s[i]] = static_cast<VertexId>(i);

    std::vector<Edge> edges;
    std::vector<std::string> labels;
    labels.reserve(s.size());
    for (VertexId u : s) labels.push_back(g.label(u));
    for (VertexId u : s) {
        for (VertexId v : g.neighbors(u)) {
            if (v > u && local_of[v] >= 0) edges.push_back({local_of[u], local_of[v]});
        }
    }
    Graph sub = Graph::from_edges(static_cast<VertexId>(s.size()), std::move(edges),
                                  std::move(labels));
    sub.parent_ids_ = s;
    return sub;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const VertexId n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> parts;
    std::deque<VertexId> queue;
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root]) continue;
        VertexSet part;
        seen[root] = 1;
        queue.push_back(root);
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop_front();
            part.push_back(u);
            for (VertexId v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

Rational density(const Graph& g) {
    if (g.vertex_count() == 0) throw ArgumentError("density: empty graph");
    return Rational(g.edge_count(), g.vertex_count());
}

std::vector<std::int64_t> core_decomposition(const Graph& g) {
    const VertexId n = g.vertex_count();
    std::vector<std::int64_t> core(n, 0);
    if (n == 0) return core;

    // Batagelj-Zaversnik bucket peeling; ties resolved by id through the
    // initial bucket fill order.
    std::vector<std::int64_t> deg(n);
    std::int64_t max_deg = 0;
    for (VertexId u = 0; u < n; ++u) {
        deg[u] = g.degree(u);
        max_deg = std::max(max_deg, deg[u]);
    }
    std::vector<std::int64_t> bin(max_deg + 2, 0);
    for (VertexId u = 0; u < n; ++u) ++bin[deg[u]];
    std::int64_t start = 0;
    for (std::int64_t d = 0; d <= max_deg; ++d) {
        const std::int64_t count = bin[d];
        bin[d] = start;
        start += count;
    }
    std::vector<VertexId> order(n);
    std::vector<std::int64_t> pos(n);
    for (VertexId u = 0; u < n; ++u) {
        pos[u] = bin[deg[u]]++;
        order[pos[u]] = u;
    }
    for (std::int64_t d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (std::int64_t i = 0; i < n; ++i) {
        const VertexId u = order[i];
        core[u] = deg[u];
        for (VertexId v : g.neighbors(u)) {
            if (deg[v] > deg[u]) {
                const std::int64_t dv = deg[v];
                const std::int64_t pv = pos[v];
                const std::int64_t pw = bin[dv];
                const VertexId w = order[pw];
                if (v != w) {
                    std::swap(order[pv], order[pw]);
                    pos[v] = pw;
                    pos[w] = pv;
                }
                ++bin[dv];
                --deg[v];
            }
        }
    }
    return core;
}

}  // namespace lds
