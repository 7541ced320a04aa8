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
#include <cstdint>
#include <span>
#include <vector>

#include "lds/graph.hpp"

namespace lds {

/// Triangle with a < b < c (internal ids of the host graph).
struct Triangle {
    VertexId a;
    VertexId b;
    VertexId c;

    std::array<VertexId, 3> members() const { return {a, b, c}; }
    bool contains(VertexId u) const { return u == a || u == b || u == c; }
};

/// Enumerated triangles of a host graph plus per-vertex incidence lists.
class TriangleIndex {
public:
    TriangleIndex() = default;
    TriangleIndex(std::vector<Triangle> triangles, VertexId n);

    std::int64_t count() const { return static_cast<std::int64_t>(triangles_.size()); }
    std::span<const Triangle> triangles() const { return triangles_; }
    const Triangle& triangle(std::int64_t idx) const { return triangles_[idx]; }

    /// Indices of triangles containing u, ascending.
    std::span<const std::int64_t> incident(VertexId u) const {
        return {incidence_.data() + offsets_[u], incidence_.data() + offsets_[u + 1]};
    }
    std::int64_t incident_count(VertexId u) const { return offsets_[u + 1] - offsets_[u]; }

private:
    std::vector<Triangle> triangles_;
    std::vector<std::int64_t> offsets_{0};
    std::vector<std::int64_t> incidence_;
};

/// Degree-ordered forward enumeration; triples come out sorted (a < b < c,
/// lexicographic overall).
TriangleIndex enumerate_triangles(const Graph& g);

/// |T|/|V| in lowest terms. Throws ArgumentError on the empty graph.
Rational tr_density(const Graph& g, const TriangleIndex& t);

/// tr-core number per vertex: peel the vertex in fewest remaining triangles,
/// smallest id on ties, recounting after each removal.
std::vector<std::int64_t> tr_core_decomposition(const Graph& g, const TriangleIndex& t);

}  // namespace lds
