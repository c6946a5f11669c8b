#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "moddom/domination.hpp"

namespace moddom {

/// Ordered product-vertex list where consecutive entries share a coordinate.
using Snake = std::vector<ProductVertex>;

enum class CornerKind { GCorner, HCorner, None };

/// One upper-bound rule application: value, stable rule id, verified witness.
struct UpperCandidate {
    ExtendedNat value;
    std::string rule;
    std::vector<ProductVertex> witness;
};

struct LowerBoundResult {
    int value = 0;
    std::string rule;  // "lobound" or "cor1"
};

struct BoundReport {
    int lower = 0;
    std::string lower_rule;
    ExtendedNat upper;
    std::string upper_rule;
    std::vector<ProductVertex> upper_witness;
};

bool is_snake(std::span<const ProductVertex> d);

/// All first coordinates and all second coordinates, as vertex sets of the
/// respective factors.
std::pair<VertexSet, VertexSet> projections(const Graph& G, const Graph& H,
                                            std::span<const ProductVertex> d);

/// Staircase through the two ordered vertex lists: advance the first
/// coordinate, then the second, alternating; once the shorter list is
/// exhausted, extend along the longer. Length |dg| + |dh| - 1.
Snake build_snake(std::span<const int> dg, std::span<const int> dh);

/// Corner determination for the 0-based entry i; one-element half snakes
/// count as both kinds, and a vertex qualifying both ways reports G_CORNER.
CornerKind corner_kind(std::span<const ProductVertex> snake, std::size_t i);

/// Smaller of the two staircases (from minimum dominating sets, and from
/// minimum total dominating sets of the complements when those are finite).
UpperCandidate snake_upper_bound(const Graph& G, const Graph& H);

/// Staircase through dg x dh minus its i-th diagonal entry, when some
/// i <= min(k,t) has no vertex meeting dg in exactly i or k-i elements
/// (or the mirrored condition on dh). Inputs must be dominating sets (or
/// total dominating sets of the complements).
std::optional<std::vector<ProductVertex>> corner_removal(const Graph& G, const Graph& H,
                                                         std::span<const int> dg,
                                                         std::span<const int> dh);

int lower_bound(const Graph& G, const Graph& H);
LowerBoundResult lower_bound_detailed(const Graph& G, const Graph& H);

/// Row witness D x {h0} from a minimum simultaneous-domination set of either
/// factor; infinite when both factors have universal vertices.
UpperCandidate sdctd_upper_bound(const Graph& G, const Graph& H);

/// Three-vertex witness from distance->=3 pairs in both factors, or nothing.
std::optional<std::vector<ProductVertex>> diam3_construction(const Graph& G, const Graph& H);

/// {(g1,h1),(g1,h2),(g2,h1)}; its closed neighborhood in the modular product
/// equals that of the full 2x2 rectangle.
std::array<ProductVertex, 3> reduce_rectangle(const Graph& G, const Graph& H, int g1, int g2,
                                              int h1, int h2);

/// Four-vertex witness when one factor has diameter >= 3 and the other an
/// adjacent pair with disjoint open neighborhoods not covering it.
std::optional<std::vector<ProductVertex>> prop4_construction(const Graph& G, const Graph& H);

/// Five-vertex witness when both factors have adjacent pairs with disjoint
/// open neighborhoods not covering them.
std::optional<std::vector<ProductVertex>> izrok_construction(const Graph& G, const Graph& H);

/// Evaluates every applicable rule in both orientations and returns the
/// minimum with its verified witness. A rule whose constructed set fails
/// verification throws; that is a defect, not a fallback.
BoundReport best_upper_bound(const Graph& G, const Graph& H);

}  // namespace moddom
