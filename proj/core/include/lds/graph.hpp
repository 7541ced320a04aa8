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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lds/rational.hpp"

namespace lds {

using VertexId = std::int32_t;

/// Sorted, duplicate-free sequence of internal vertex ids.
using VertexSet = std::vector<VertexId>;

/// Canonical undirected edge, u < v.
struct Edge {
    VertexId u;
    VertexId v;
};

/// Immutable simple undirected graph. Internal ids are 0..n-1, adjacency
/// lists are strictly increasing, and the edge list is sorted with u < v.
class Graph {
public:
    Graph() = default;

    /// Builds from an arbitrary edge collection; drops self-loops and
    /// duplicates. `labels` may be empty, in which case ids name themselves.
    static Graph from_edges(VertexId n, std::vector<Edge> edges,
                            std::vector<std::string> labels = {});

    VertexId vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }

    std::span<const VertexId> neighbors(VertexId u) const {
        return {adj_.data() + adj_offsets_[u], adj_.data() + adj_offsets_[u + 1]};
    }
    std::int64_t degree(VertexId u) const { return adj_offsets_[u + 1] - adj_offsets_[u]; }

    bool has_edge(VertexId u, VertexId v) const;

    const std::string& label(VertexId u) const { return labels_[u]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// For graphs produced by induced_subgraph: internal id in the parent
    /// graph for each local id. Empty for root graphs.
    const std::vector<VertexId>& parent_ids() const { return parent_ids_; }

private:
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> adj_offsets_{0};
    std::vector<VertexId> adj_;
    std::vector<std::string> labels_;
    std::vector<VertexId> parent_ids_;

    friend Graph induced_subgraph(const Graph&, const VertexSet&);
};

/// Ingestion statistics for load_edge_list.
struct LoadStats {
    std::int64_t self_loops_dropped = 0;
    std::int64_t duplicates_dropped = 0;
    std::int64_t comment_lines = 0;
};

/// Reads whitespace-separated "u v" lines; '#'/'%' lines are comments.
/// Labels map to contiguous internal ids in first-appearance order.
/// Throws ParseError (with line number) on a line that is not two tokens.
Graph load_edge_list(std::istream& in, LoadStats* stats = nullptr);

/// Subgraph induced by `s`; result carries parent_ids() back into `g`.
/// Throws ArgumentError if `s` is not a sorted subset of g's vertices.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Partition into connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// |E|/|V| in lowest terms. Throws ArgumentError on the empty graph.
Rational density(const Graph& g);

/// Core number per vertex via minimum-degree peeling.
std::vector<std::int64_t> core_decomposition(const Graph& g);

}  // namespace lds
