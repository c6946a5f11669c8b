#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "moddom/graph.hpp"
#include "moddom/products.hpp"

namespace moddom {

/// Outcome of an exact solve. For minimization, `witness` lists the chosen
/// vertices (ascending index defines the ordered form used elsewhere). When a
/// budget was given and exhausted, `exact` is false, `value` = budget+1 is a
/// proven strict lower bound and no witness is carried.
struct SolveResult {
    ExtendedNat value;
    std::optional<VertexSet> witness;
    std::uint64_t nodes_explored = 0;
    bool exact = true;
};

bool is_dominating(const Graph& g, const VertexSet& d);
bool is_total_dominating(const Graph& g, const VertexSet& d);

/// Exact branch-and-bound: greedy max-coverage incumbent, greedy-packing
/// lower bound, branching over the candidates of an uncovered vertex of
/// minimum candidate count, candidates in ascending index order.
SolveResult domination_number(const Graph& g);
/// Same search with a set of vertices forced into the solution.
SolveResult domination_number_with(const Graph& g, std::span<const int> forced);

SolveResult total_domination_number(const Graph& g);

/// Maximum set of vertices with pairwise disjoint closed neighborhoods.
SolveResult packing_number(const Graph& g);

/// Some set whose closed neighborhoods partition V(g), or nothing.
std::optional<VertexSet> find_ecd_set(const Graph& g);
std::optional<VertexSet> find_ecd_set_of_size(const Graph& g, int size);

/// Dominating in g and total dominating in its complement.
bool is_sdctd(const Graph& g, const VertexSet& d);
SolveResult sdctd_number(const Graph& g);

/// Exact minimum dominating set of the modular product of G and H, computed
/// from factor neighborhoods without materializing the product graph.
SolveResult product_domination_number(const Graph& G, const Graph& H,
                                      std::optional<int> budget = std::nullopt);

/// Independent domination check for product vertex sets via the index-subset
/// characterization; |D| is capped at 20.
bool dominating_via_index_sets(const Graph& G, const Graph& H,
                               std::span<const ProductVertex> d);

}  // namespace moddom
