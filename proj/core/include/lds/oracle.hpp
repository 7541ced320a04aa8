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

#include <vector>

#include "lds/graph.hpp"
#include "lds/mode.hpp"
#include "lds/rational.hpp"
#include "lds/triangles.hpp"

// Exponential-time reference implementations, exact rational arithmetic
// throughout. Deliberately slow and independent of the production path;
// everything here iterates bitmask subsets.
namespace lds::oracle {

/// Largest rho such that g is rho-compact: min over non-empty Q of
/// (edges removed by deleting Q) / |Q|. Disconnected input yields 0.
/// Throws ResourceError above 20 vertices.
Rational compactness_bf(const Graph& g);

/// Triangle analogue of compactness_bf.
Rational tr_compactness_bf(const Graph& g, const TriangleIndex& t);

/// phi(u): max compactness over connected induced subgraphs containing u.
/// Throws ResourceError above 12 vertices.
std::vector<Rational> compact_numbers_bf(const Graph& g, DensityMode mode);

struct LdsEntry {
    VertexSet vertices;
    Rational density;
};

/// All locally (tr-)densest subgraphs: connected G[S] whose compactness
/// equals its density, with no rho-compact strict superset. Sorted by
/// density descending, ties by smallest member id.
/// Throws ResourceError above 10 vertices.
std::vector<LdsEntry> enumerate_lds_bf(const Graph& g, DensityMode mode);

/// Maximum (tr-)density over non-empty induced subgraphs.
/// Throws ResourceError above 15 vertices.
Rational densest_bf(const Graph& g, DensityMode mode);

}  // namespace lds::oracle
