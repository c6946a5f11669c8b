#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moddom/domination.hpp"

namespace moddom {

/// Subset of the index universe [q] = {1..q}; bit j-1 of mask stands for j.
struct IndexSubset {
    int q = 3;
    unsigned mask = 0;
};

/// Vertices whose closed neighborhood meets the ordered set d in exactly the
/// I-indexed elements.
VertexSet A_set(const Graph& g, std::span<const int> d, IndexSubset I);
int a_indicator(const Graph& g, std::span<const int> d, IndexSubset I);

bool equals_one(const Graph& G, const Graph& H);

/// "two(i)" or "two(ii)" when the respective clause holds, assuming the
/// product's domination number is not 1; nothing otherwise.
std::optional<std::string> equals_two(const Graph& G, const Graph& H);

bool at_least_three(const Graph& G, const Graph& H);

/// First satisfied clause among dom3(i)..dom3(iv); requires at_least_three.
std::optional<std::string> equals_three(const Graph& G, const Graph& H);

enum class GammaClass { Eq1, Eq2, Eq3, Ge4 };

struct CharacterizationVerdict {
    GammaClass klass = GammaClass::Ge4;
    std::string condition;
    std::map<std::string, std::vector<int>> witnesses;
};

std::string to_string(GammaClass k);

enum class CrossCheck { Off, Auto };

/// Cascaded decision; with CrossCheck::Auto the verdict is checked against
/// the exact solver whenever the product fits the vertex cap (a mismatch
/// throws — it would be a defect).
CharacterizationVerdict classify(const Graph& G, const Graph& H,
                                 CrossCheck check = CrossCheck::Auto);

}  // namespace moddom
