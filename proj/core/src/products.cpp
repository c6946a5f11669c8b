#include "moddom/products.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace moddom {

namespace {

void check_product_size(const Graph& G, const Graph& H) {
    const long long v = static_cast<long long>(G.order()) * H.order();
    if (v > kMaxVertices)
        throw std::invalid_argument("product on " + std::to_string(v) + " vertices exceeds the " +
                                    std::to_string(kMaxVertices) + "-vertex cap");
}

template <typename EdgePred>
Graph build_product(const Graph& G, const Graph& H, EdgePred edge) {
    check_product_size(G, H);
    const int ng = G.order(), nh = H.order();
    const std::size_t n = static_cast<std::size_t>(ng) * static_cast<std::size_t>(nh);
    std::vector<Bitset> rows(n, Bitset(n));
    for (int g1 = 0; g1 < ng; ++g1)
        for (int h1 = 0; h1 < nh; ++h1) {
            const std::size_t a = static_cast<std::size_t>(g1 * nh + h1);
            for (int g2 = g1; g2 < ng; ++g2) {
                const int h_start = (g2 == g1) ? h1 + 1 : 0;
                for (int h2 = h_start; h2 < nh; ++h2) {
                    if (edge(g1, h1, g2, h2)) {
                        const std::size_t b = static_cast<std::size_t>(g2 * nh + h2);
                        rows[a].set(b);
                        rows[b].set(a);
                    }
                }
            }
        }
    return Graph::from_adjacency(std::move(rows));
}

}  // namespace

Graph modular_product(const Graph& G, const Graph& H) {
    return build_product(G, H, [&](int g1, int h1, int g2, int h2) {
        const bool eg = g1 != g2 && G.adjacent(g1, g2);
        const bool eh = h1 != h2 && H.adjacent(h1, h2);
        if (g1 == g2) return eh;
        if (h1 == h2) return eg;
        return (eg && eh) || (!eg && !eh);
    });
}

Graph cartesian_product(const Graph& G, const Graph& H) {
    return build_product(G, H, [&](int g1, int h1, int g2, int h2) {
        return (g1 == g2 && H.adjacent(h1, h2)) || (h1 == h2 && G.adjacent(g1, g2));
    });
}

Graph direct_product(const Graph& G, const Graph& H) {
    return build_product(G, H, [&](int g1, int h1, int g2, int h2) {
        return g1 != g2 && h1 != h2 && G.adjacent(g1, g2) && H.adjacent(h1, h2);
    });
}

Graph strong_product(const Graph& G, const Graph& H) {
    return build_product(G, H, [&](int g1, int h1, int g2, int h2) {
        const bool eg = g1 != g2 && G.adjacent(g1, g2);
        const bool eh = h1 != h2 && H.adjacent(h1, h2);
        if (g1 == g2) return eh;
        if (h1 == h2) return eg;
        return eg && eh;
    });
}

Graph lexicographic_product(const Graph& G, const Graph& H) {
    return build_product(G, H, [&](int g1, int h1, int g2, int h2) {
        if (g1 != g2 && G.adjacent(g1, g2)) return true;
        return g1 == g2 && H.adjacent(h1, h2);
    });
}

EdgeKind classify_edge(const Graph& G, const Graph& H, ProductVertex a, ProductVertex b) {
    if (a == b) throw std::invalid_argument("classify_edge: identical endpoints");
    const bool eg = a.g != b.g && G.adjacent(a.g, b.g);
    const bool eh = a.h != b.h && H.adjacent(a.h, b.h);
    if (a.g == b.g) return eh ? EdgeKind::Cartesian : EdgeKind::None;
    if (a.h == b.h) return eg ? EdgeKind::Cartesian : EdgeKind::None;
    if (eg && eh) return EdgeKind::Direct;
    if (!eg && !eh) return EdgeKind::Codirect;
    return EdgeKind::None;
}

bool dominates(const Graph& G, const Graph& H, ProductVertex dominator, ProductVertex target) {
    const bool in_g = G.closed_neighborhood(dominator.g).test(static_cast<std::size_t>(target.g));
    const bool in_h = H.closed_neighborhood(dominator.h).test(static_cast<std::size_t>(target.h));
    return in_g == in_h;
}

namespace {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> map;      // a-vertex -> b-vertex or -1
    std::vector<bool> used;    // b-vertex taken
    std::vector<int> order;    // a-vertices, high degree first

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const int u = order[depth];
        for (int v = 0; v < b.order(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (a.degree(u) != b.degree(v)) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth; ++d) {
                const int w = order[d];
                if (a.adjacent(u, w) != b.adjacent(v, map[static_cast<std::size_t>(w)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(u)] = v;
            used[static_cast<std::size_t>(v)] = true;
            if (extend(depth + 1)) return true;
            used[static_cast<std::size_t>(v)] = false;
            map[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > kIsomorphismCap || b.order() > kIsomorphismCap)
        throw std::invalid_argument("isomorphism test limited to " +
                                    std::to_string(kIsomorphismCap) + " vertices");
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    IsoSearch s{a, b, std::vector<int>(static_cast<std::size_t>(a.order()), -1),
                std::vector<bool>(static_cast<std::size_t>(b.order()), false), {}};
    for (int v = 0; v < a.order(); ++v) s.order.push_back(v);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int x, int y) { return da[static_cast<std::size_t>(x)] > da[static_cast<std::size_t>(y)]; });
    return s.extend(0);
}

}  // namespace moddom
