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
#include "lds/frank_wolfe.hpp"

#include "lds/errors.hpp"

namespace lds {

CPState fw_edge(const Graph& g, int iters) {
    if (iters < 1) throw ArgumentError("fw_edge: iters must be >= 1");
    CPState state;
    state.mode = DensityMode::edge;

    const VertexId n = g.vertex_count();
    const auto edges = g.edges();
    state.edge_share_lo.assign(edges.size(), 0.5);
    state.r.assign(n, 0.0);
    for (VertexId u = 0; u < n; ++u) state.r[u] = 0.5 * static_cast<double>(g.degree(u));

    std::vector<std::int64_t> won(n);
    for (int i = 1; i <= iters; ++i) {
        const double gamma = 2.0 / (i + 2);
        std::fill(won.begin(), won.end(), 0);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const VertexId u = edges[e].u, v = edges[e].v;
            // Ties go to u, the smaller id.
            const bool lo_wins = !(state.r[v] < state.r[u]);
            state.edge_share_lo[e] = (1.0 - gamma) * state.edge_share_lo[e] + (lo_wins ? gamma : 0.0);
            ++won[lo_wins ? u : v];
        }
        for (VertexId u = 0; u < n; ++u)
            state.r[u] = (1.0 - gamma) * state.r[u] + gamma * static_cast<double>(won[u]);
    }
    return state;
}

CPState fw_triangle(const Graph& g, const TriangleIndex& t, int iters) {
    if (iters < 1) throw ArgumentError("fw_triangle: iters must be >= 1");
    CPState state;
    state.mode = DensityMode::triangle;

    const VertexId n = g.vertex_count();
    const auto tris = t.triangles();
    state.tri_share.assign(tris.size(), {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    state.r.assign(n, 0.0);
    for (VertexId u = 0; u < n; ++u)
        state.r[u] = static_cast<double>(t.incident_count(u)) / 3.0;

    std::vector<std::int64_t> won(n);
    for (int i = 1; i <= iters; ++i) {
        const double gamma = 2.0 / (i + 2);
        std::fill(won.begin(), won.end(), 0);
        for (std::size_t ti = 0; ti < tris.size(); ++ti) {
            const auto members = tris[ti].members();
            // Strict comparison keeps the earliest (= smallest id) on ties.
            int best = 0;
            if (state.r[members[1]] < state.r[members[best]]) best = 1;
            if (state.r[members[2]] < state.r[members[best]]) best = 2;
            auto& share = state.tri_share[ti];
            for (int j = 0; j < 3; ++j)
                share[j] = (1.0 - gamma) * share[j] + (j == best ? gamma : 0.0);
            ++won[members[best]];
        }
        for (VertexId u = 0; u < n; ++u)
            state.r[u] = (1.0 - gamma) * state.r[u] + gamma * static_cast<double>(won[u]);
    }
    return state;
}

double objective(const CPState& state) {
    double sum = 0.0;
    for (double x : state.r) sum += x * x;
    return sum;
}

}  // namespace lds
