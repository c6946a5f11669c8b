#pragma once

// Enumeration oracles for expected values. These stay deliberately naive and
// separate from the library's branch-and-bound machinery so the two can
// disagree loudly.

#include <optional>
#include <vector>

#include "moddom/graph.hpp"

namespace oracle {

template <typename Check>
bool any_subset_of_size(int n, int k, Check&& check) {
    if (k < 0 || k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (check(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline bool dominating(const moddom::Graph& g, const std::vector<int>& d) {
    for (int u = 0; u < g.order(); ++u) {
        bool hit = false;
        for (int v : d)
            if (u == v || g.adjacent(u, v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

inline bool total_dominating(const moddom::Graph& g, const std::vector<int>& d) {
    for (int u = 0; u < g.order(); ++u) {
        bool hit = false;
        for (int v : d)
            if (u != v && g.adjacent(u, v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

inline std::optional<int> domination_number_capped(const moddom::Graph& g, int cap) {
    for (int k = 0; k <= std::min(cap, g.order()); ++k)
        if (any_subset_of_size(g.order(), k,
                               [&](const std::vector<int>& d) { return dominating(g, d); }))
            return k;
    return std::nullopt;
}

inline int domination_number(const moddom::Graph& g) {
    return *domination_number_capped(g, g.order());
}

inline std::optional<int> total_domination_number(const moddom::Graph& g) {
    for (int k = 0; k <= g.order(); ++k)
        if (any_subset_of_size(g.order(), k,
                               [&](const std::vector<int>& d) { return total_dominating(g, d); }))
            return k;
    return std::nullopt;
}

inline std::optional<int> sdctd_number(const moddom::Graph& g) {
    const moddom::Graph comp = g.complement();
    for (int k = 0; k <= g.order(); ++k)
        if (any_subset_of_size(g.order(), k, [&](const std::vector<int>& d) {
                return dominating(g, d) && total_dominating(comp, d);
            }))
            return k;
    return std::nullopt;
}

inline int packing_number(const moddom::Graph& g) {
    auto disjoint = [&](const std::vector<int>& d) {
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j)
                if (g.closed_neighborhood(d[i]).intersects(g.closed_neighborhood(d[j])))
                    return false;
        return true;
    };
    for (int k = g.order(); k >= 1; --k)
        if (any_subset_of_size(g.order(), k, disjoint)) return k;
    return 0;
}

inline bool has_ecd_set(const moddom::Graph& g) {
    for (int k = 1; k <= g.order(); ++k)
        if (any_subset_of_size(g.order(), k, [&](const std::vector<int>& d) {
                moddom::Bitset seen(static_cast<std::size_t>(g.order()));
                std::size_t covered = 0;
                for (int v : d) {
                    if (g.closed_neighborhood(v).intersects(seen)) return false;
                    seen |= g.closed_neighborhood(v);
                    covered += g.closed_neighborhood(v).count();
                }
                return covered == static_cast<std::size_t>(g.order());
            }))
            return true;
    return false;
}

}  // namespace oracle
