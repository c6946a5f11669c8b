#include "moddom/graph.hpp"

#include <stdexcept>
#include <string>

namespace moddom {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1," + std::to_string(kMaxVertices) +
                                    "], got " + std::to_string(n));
    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        rows[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        rows[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }
    return from_adjacency(std::move(rows));
}

Graph Graph::from_adjacency(std::vector<Bitset> open_rows) {
    const int n = static_cast<int>(open_rows.size());
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1," + std::to_string(kMaxVertices) +
                                    "], got " + std::to_string(n));
    for (int v = 0; v < n; ++v) {
        const auto& row = open_rows[static_cast<std::size_t>(v)];
        if (static_cast<int>(row.width()) != n)
            throw std::invalid_argument("adjacency row width mismatch");
        if (row.test(static_cast<std::size_t>(v))) throw std::invalid_argument("loops are not allowed");
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (open_rows[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)) !=
                open_rows[static_cast<std::size_t>(v)].test(static_cast<std::size_t>(u)))
                throw std::invalid_argument("adjacency must be symmetric");

    Graph g;
    g.n_ = n;
    g.open_ = std::move(open_rows);
    g.closed_.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Bitset c = g.open_[static_cast<std::size_t>(v)];
        c.set(static_cast<std::size_t>(v));
        g.closed_.push_back(std::move(c));
    }
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : open_) twice += row.count();
    return twice / 2;
}

Graph Graph::complement() const {
    std::vector<Bitset> rows;
    rows.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
        Bitset row = closed_[static_cast<std::size_t>(v)].complemented();
        rows.push_back(std::move(row));
    }
    return from_adjacency(std::move(rows));
}

ExtendedNat Graph::distance(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    Bitset visited(static_cast<std::size_t>(n_));
    visited.set(static_cast<std::size_t>(u));
    Bitset frontier = visited;
    std::uint64_t d = 0;
    while (frontier.any()) {
        ++d;
        Bitset next(static_cast<std::size_t>(n_));
        frontier.for_each([&](int b) { next |= open_[static_cast<std::size_t>(b)]; });
        next.subtract(visited);
        if (next.test(static_cast<std::size_t>(v))) return d;
        visited |= next;
        frontier = std::move(next);
    }
    return ExtendedNat::infinity();
}

ExtendedNat Graph::diameter() const {
    if (n_ == 1) return 0;
    std::uint64_t best = 0;
    for (int s = 0; s < n_; ++s) {
        Bitset visited(static_cast<std::size_t>(n_));
        visited.set(static_cast<std::size_t>(s));
        Bitset frontier = visited;
        std::uint64_t ecc = 0;
        while (true) {
            Bitset next(static_cast<std::size_t>(n_));
            frontier.for_each([&](int b) { next |= open_[static_cast<std::size_t>(b)]; });
            next.subtract(visited);
            if (next.none()) break;
            ++ecc;
            visited |= next;
            frontier = std::move(next);
        }
        if (visited.count() != static_cast<std::size_t>(n_)) return ExtendedNat::infinity();
        if (ecc > best) best = ecc;
    }
    return best;
}

bool Graph::is_connected() const {
    Bitset visited(static_cast<std::size_t>(n_));
    visited.set(0);
    Bitset frontier = visited;
    while (frontier.any()) {
        Bitset next(static_cast<std::size_t>(n_));
        frontier.for_each([&](int b) { next |= open_[static_cast<std::size_t>(b)]; });
        next.subtract(visited);
        visited |= next;
        frontier = std::move(next);
    }
    return visited.count() == static_cast<std::size_t>(n_);
}

std::optional<int> Graph::universal_vertex() const {
    const Bitset all = Bitset::full(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
        if (closed_[static_cast<std::size_t>(v)] == all) return v;
    return std::nullopt;
}

VertexSet Graph::private_neighbors(int v, const VertexSet& dominating_set) const {
    check_vertex(v);
    if (dominating_set.width() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("vertex set width mismatch");
    if (!dominating_set.test(static_cast<std::size_t>(v)))
        throw std::invalid_argument("private_neighbors: vertex not in the set");
    Bitset others(static_cast<std::size_t>(n_));
    dominating_set.for_each([&](int u) {
        if (u != v) others |= closed_[static_cast<std::size_t>(u)];
    });
    Bitset r = closed_[static_cast<std::size_t>(v)];
    r.subtract(others);
    return r;
}

}  // namespace moddom
