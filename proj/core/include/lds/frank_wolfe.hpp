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
#pragma once

#include <array>
#include <vector>

#include "lds/graph.hpp"
#include "lds/mode.hpp"
#include "lds/triangles.hpp"

namespace lds {

/// Weight-distribution state of the convex program. In edge mode each edge
/// splits one unit between its endpoints; in triangle mode each triangle
/// splits one unit among its three members. r accumulates per-vertex weight.
struct CPState {
    DensityMode mode = DensityMode::edge;

    /// Edge mode: share taken by the smaller endpoint of each canonical
    /// edge; the larger endpoint holds the complement, so every pair sums
    /// to one by representation.
    std::vector<double> edge_share_lo;

    /// Triangle mode: shares aligned with Triangle{a, b, c}.
    std::vector<std::array<double, 3>> tri_share;

    std::vector<double> r;

    double edge_share(const Edge& e, VertexId endpoint, std::size_t edge_idx) const {
        return endpoint == e.u ? edge_share_lo[edge_idx] : 1.0 - edge_share_lo[edge_idx];
    }
};

/// Frank-Wolfe on the edge program: uniform 1/2 start, step 2/(i+2); each
/// step sends every edge's unit to the endpoint with the smaller previous r
/// (ties toward the smaller id). Exactly `iters` steps.
CPState fw_edge(const Graph& g, int iters);

/// Triangle variant: uniform 1/3 start; each triangle's unit goes to the
/// member with the smallest previous r (ties toward the smallest id).
CPState fw_triangle(const Graph& g, const TriangleIndex& t, int iters);

/// Sum of squared received weights.
double objective(const CPState& state);

}  // namespace lds
