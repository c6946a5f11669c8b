#pragma once

#include <compare>
#include <cstddef>

#include "moddom/graph.hpp"

namespace moddom {

/// Vertex (g,h) of a product of G and H; the flat index is g*|V(H)| + h.
struct ProductVertex {
    int g = 0;
    int h = 0;
    friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

inline int flat_index(ProductVertex v, int h_order) { return v.g * h_order + v.h; }
inline ProductVertex product_vertex_from_flat(int idx, int h_order) {
    return {idx / h_order, idx % h_order};
}

/// The three pairwise-disjoint edge classes of the modular product.
enum class EdgeKind { Cartesian, Direct, Codirect, None };

Graph modular_product(const Graph& G, const Graph& H);
Graph cartesian_product(const Graph& G, const Graph& H);
Graph direct_product(const Graph& G, const Graph& H);
Graph strong_product(const Graph& G, const Graph& H);
Graph lexicographic_product(const Graph& G, const Graph& H);

EdgeKind classify_edge(const Graph& G, const Graph& H, ProductVertex a, ProductVertex b);

/// Whether `target` lies in the closed neighborhood of `dominator` in the
/// modular product, decided from factor neighborhoods alone (the product is
/// never materialized). Symmetric in its two product-vertex arguments.
bool dominates(const Graph& G, const Graph& H, ProductVertex dominator, ProductVertex target);

inline constexpr int kIsomorphismCap = 16;

/// Backtracking isomorphism test with degree pruning; a small-graph facility
/// only (orders above kIsomorphismCap are refused).
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace moddom
