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
#include "lds/oracle.hpp"

#include <algorithm>
#include <bit>

#include "lds/errors.hpp"

namespace lds::oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= Mask{1} << e.v;
        adj[e.v] |= Mask{1} << e.u;
    }
    return adj;
}

bool mask_connected(Mask mask, const std::vector<Mask>& adj) {
    if (mask == 0) return false;
    const int start = std::countr_zero(mask);
    Mask seen = Mask{1} << start;
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        Mask f = frontier;
        while (f) {
            const int u = std::countr_zero(f);
            f &= f - 1;
            next |= adj[u] & mask & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

/// units[mask] = number of edges (or triangles) fully inside mask.
std::vector<std::int32_t> unit_counts(const Graph& g, const TriangleIndex* tri, int n) {
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::int32_t> units(total, 0);
    if (tri == nullptr) {
        const auto adj = adjacency_masks(g);
        for (Mask mask = 1; mask < total; ++mask) {
            const int v = std::countr_zero(mask);
            const Mask rest = mask & (mask - 1);
            units[mask] = units[rest] + std::popcount(adj[v] & rest);
        }
    } else {
        std::vector<std::vector<Mask>> pair_masks(n);
        for (const Triangle& t : tri->triangles()) {
            pair_masks[t.a].push_back((Mask{1} << t.b) | (Mask{1} << t.c));
            pair_masks[t.b].push_back((Mask{1} << t.a) | (Mask{1} << t.c));
            pair_masks[t.c].push_back((Mask{1} << t.a) | (Mask{1} << t.b));
        }
        for (Mask mask = 1; mask < total; ++mask) {
            const int v = std::countr_zero(mask);
            const Mask rest = mask & (mask - 1);
            std::int32_t with_v = 0;
            for (Mask pm : pair_masks[v])
                if ((pm & rest) == pm) ++with_v;
            units[mask] = units[rest] + with_v;
        }
    }
    return units;
}

/// Min over non-empty Q subset of `universe` of units-destroyed/|Q|.
Rational compactness_of_mask(Mask universe, const std::vector<std::int32_t>& units) {
    const std::int64_t inside = units[universe];
    Rational best(inside, std::popcount(universe));  // Q = universe
    for (Mask keep = (universe - 1) & universe; keep != 0; keep = (keep - 1) & universe) {
        const Mask q = universe & ~keep;
        const Rational ratio(inside - units[keep], std::popcount(q));
        if (ratio < best) best = ratio;
    }
    return best;
}

VertexSet mask_to_set(Mask mask) {
    VertexSet s;
    while (mask) {
        s.push_back(static_cast<VertexId>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return s;
}

void require_at_most(const Graph& g, int limit, const char* who) {
    if (g.vertex_count() > limit)
        throw ResourceError(std::string(who) + ": graph larger than " + std::to_string(limit) +
                            " vertices");
}

Rational compactness_impl(const Graph& g, const TriangleIndex* tri) {
    const int n = g.vertex_count();
    if (n == 0) throw ArgumentError("compactness_bf: empty graph");
    const auto adj = adjacency_masks(g);
    const Mask full = (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1;
    if (!mask_connected(full, adj)) return Rational(0, 1);
    const auto units = unit_counts(g, tri, n);
    return compactness_of_mask(full, units);
}

}  // namespace

Rational compactness_bf(const Graph& g) {
    require_at_most(g, 20, "compactness_bf");
    return compactness_impl(g, nullptr);
}

Rational tr_compactness_bf(const Graph& g, const TriangleIndex& t) {
    require_at_most(g, 20, "tr_compactness_bf");
    return compactness_impl(g, &t);
}

std::vector<Rational> compact_numbers_bf(const Graph& g, DensityMode mode) {
    require_at_most(g, 12, "compact_numbers_bf");
    const int n = g.vertex_count();
    std::vector<Rational> phi(n, Rational(0, 1));
    if (n == 0) return phi;

    TriangleIndex tri;
    if (mode == DensityMode::triangle) tri = enumerate_triangles(g);
    const auto adj = adjacency_masks(g);
    const auto units = unit_counts(g, mode == DensityMode::triangle ? &tri : nullptr, n);

    const std::size_t total = std::size_t{1} << n;
    for (Mask mask = 1; mask < total; ++mask) {
        if (!mask_connected(mask, adj)) continue;
        const Rational c = compactness_of_mask(mask, units);
        Mask members = mask;
        while (members) {
            const int u = std::countr_zero(members);
            members &= members - 1;
            if (phi[u] < c) phi[u] = c;
        }
    }
    return phi;
}

std::vector<LdsEntry> enumerate_lds_bf(const Graph& g, DensityMode mode) {
    require_at_most(g, 10, "enumerate_lds_bf");
    const int n = g.vertex_count();
    std::vector<LdsEntry> out;
    if (n == 0) return out;

    TriangleIndex tri;
    if (mode == DensityMode::triangle) tri = enumerate_triangles(g);
    const auto adj = adjacency_masks(g);
    const auto units = unit_counts(g, mode == DensityMode::triangle ? &tri : nullptr, n);

    const std::size_t total = std::size_t{1} << n;
    std::vector<char> connected(total, 0);
    std::vector<Rational> compactness(total, Rational(0, 1));
    for (Mask mask = 1; mask < total; ++mask) {
        connected[mask] = mask_connected(mask, adj);
        if (connected[mask]) compactness[mask] = compactness_of_mask(mask, units);
    }

    const Mask full = (Mask{1} << n) - 1;
    for (Mask mask = 1; mask < total; ++mask) {
        if (!connected[mask]) continue;
        const Rational rho(units[mask], std::popcount(mask));
        if (compactness[mask] != rho) continue;
        // Maximality: no connected strict superset that is still rho-compact.
        bool maximal = true;
        const Mask outside = full & ~mask;
        for (Mask extra = outside; extra != 0 && maximal; extra = (extra - 1) & outside) {
            const Mask super = mask | extra;
            if (connected[super] && compactness[super] >= rho) maximal = false;
        }
        if (maximal) out.push_back({mask_to_set(mask), rho});
    }
    std::sort(out.begin(), out.end(), [](const LdsEntry& a, const LdsEntry& b) {
        if (a.density != b.density) return b.density < a.density;
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

Rational densest_bf(const Graph& g, DensityMode mode) {
    require_at_most(g, 15, "densest_bf");
    const int n = g.vertex_count();
    if (n == 0) throw ArgumentError("densest_bf: empty graph");
    TriangleIndex tri;
    if (mode == DensityMode::triangle) tri = enumerate_triangles(g);
    const auto units = unit_counts(g, mode == DensityMode::triangle ? &tri : nullptr, n);
    const std::size_t total = std::size_t{1} << n;
    Rational best(0, 1);
    for (Mask mask = 1; mask < total; ++mask) {
        const Rational d(units[mask], std::popcount(mask));
        if (best < d) best = d;
    }
    return best;
}

}  // namespace lds::oracle
