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
#include "lds/triangles.hpp"

#include <algorithm>
#include <queue>

#include "lds/errors.hpp"

namespace lds {

TriangleIndex::TriangleIndex(std::vector<Triangle> triangles, VertexId n)
    : triangles_(std::move(triangles)) {
    offsets_.assign(n + 1, 0);
    for (const Triangle& t : triangles_) {
        ++offsets_[t.a + 1];
        ++offsets_[t.b + 1];
        ++offsets_[t.c + 1];
    }
    for (VertexId u = 0; u < n; ++u) offsets_[u + 1] += offsets_[u];
    incidence_.resize(offsets_[n]);
    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::int64_t i = 0; i < count(); ++i) {
        const Triangle& t = triangles_[i];
        incidence_[cursor[t.a]++] = i;
        incidence_[cursor[t.b]++] = i;
        incidence_[cursor[t.c]++] = i;
    }
}

TriangleIndex enumerate_triangles(const Graph& g) {
    const VertexId n = g.vertex_count();

    // Rank vertices by (degree, id); each edge points from lower to higher
    // rank, and triangles are closed by intersecting forward lists.
    std::vector<VertexId> rank(n);
    {
        std::vector<VertexId> order(n);
        for (VertexId u = 0; u < n; ++u) order[u] = u;
        std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
            const auto da = g.degree(a), db = g.degree(b);
            return da < db || (da == db && a < b);
        });
        for (VertexId i = 0; i < n; ++i) rank[order[i]] = i;
    }

    std::vector<std::vector<VertexId>> forward(n);
    for (const Edge& e : g.edges()) {
        if (rank[e.u] < rank[e.v])
            forward[e.u].push_back(e.v);
        else
            forward[e.v].push_back(e.u);
    }
    for (auto& f : forward)
        std::sort(f.begin(), f.end(),
                  [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });

    std::vector<Triangle> tris;
    std::vector<char> mark(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : forward[u]) mark[v] = 1;
        for (VertexId v : forward[u]) {
            for (VertexId w : forward[v]) {
                if (mark[w]) {
                    VertexId t[3] = {u, v, w};
                    std::sort(t, t + 3);
                    tris.push_back({t[0], t[1], t[2]});
                }
            }
        }
        for (VertexId v : forward[u]) mark[v] = 0;
    }
    std::sort(tris.begin(), tris.end(), [](const Triangle& x, const Triangle& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    });
    return TriangleIndex(std::move(tris), n);
}

Rational tr_density(const Graph& g, const TriangleIndex& t) {
    if (g.vertex_count() == 0) throw ArgumentError("tr_density: empty graph");
    return Rational(t.count(), g.vertex_count());
}

std::vector<std::int64_t> tr_core_decomposition(const Graph& g, const TriangleIndex& t) {
    const VertexId n = g.vertex_count();
    std::vector<std::int64_t> core(n, 0);
    if (n == 0) return core;

    std::vector<std::int64_t> live_count(n);
    for (VertexId u = 0; u < n; ++u) live_count[u] = t.incident_count(u);
    std::vector<char> vertex_dead(n, 0);
    std::vector<char> tri_dead(t.count(), 0);

    using Entry = std::pair<std::int64_t, VertexId>;  // (count, id)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (VertexId u = 0; u < n; ++u) heap.push({live_count[u], u});

    std::int64_t level = 0;
    while (!heap.empty()) {
        const auto [cnt, u] = heap.top();
        heap.pop();
        if (vertex_dead[u] || cnt != live_count[u]) continue;  // stale entry
        level = std::max(level, cnt);
        core[u] = level;
        vertex_dead[u] = 1;
        for (std::int64_t ti : t.incident(u)) {
            if (tri_dead[ti]) continue;
            tri_dead[ti] = 1;
            for (VertexId w : t.triangle(ti).members()) {
                if (w != u && !vertex_dead[w]) {
                    --live_count[w];
                    heap.push({live_count[w], w});
                }
            }
        }
    }
    return core;
}

}  // namespace lds
