#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "moddom/bitset.hpp"
#include "moddom/extended_nat.hpp"

namespace moddom {

/// A subset of one graph's vertex universe (width = order of that graph).
using VertexSet = Bitset;

inline constexpr int kMaxVertices = 4096;

/// Immutable simple graph on vertices 0..n-1. Adjacency rows are bit vectors;
/// both open and closed neighborhoods are materialized at construction so the
/// solver inner loops stay word-parallel.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    /// Validates symmetry, absence of loops and the order guard.
    static Graph from_adjacency(std::vector<Bitset> open_rows);

    int order() const { return n_; }
    std::size_t edge_count() const;

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return open_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }

    const VertexSet& open_neighborhood(int v) const {
        check_vertex(v);
        return open_[static_cast<std::size_t>(v)];
    }
    const VertexSet& closed_neighborhood(int v) const {
        check_vertex(v);
        return closed_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(open_neighborhood(v).count()); }

    Graph complement() const;

    ExtendedNat distance(int u, int v) const;
    ExtendedNat diameter() const;
    bool is_connected() const;

    /// Lowest-index universal vertex, if any.
    std::optional<int> universal_vertex() const;

    /// Private neighbors of v with respect to a set containing v.
    VertexSet private_neighbors(int v, const VertexSet& dominating_set) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Bitset> open_;
    std::vector<Bitset> closed_;
};

}  // namespace moddom
