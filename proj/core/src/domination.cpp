#include "moddom/domination.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace moddom {

bool is_dominating(const Graph& g, const VertexSet& d) {
    Bitset covered(static_cast<std::size_t>(g.order()));
    d.for_each([&](int v) { covered |= g.closed_neighborhood(v); });
    return covered == Bitset::full(static_cast<std::size_t>(g.order()));
}

bool is_total_dominating(const Graph& g, const VertexSet& d) {
    Bitset covered(static_cast<std::size_t>(g.order()));
    d.for_each([&](int v) { covered |= g.open_neighborhood(v); });
    return covered == Bitset::full(static_cast<std::size_t>(g.order()));
}

namespace {

/// Minimum-cardinality cover instance: pick candidates so that the union of
/// their cover rows is the whole universe. `dominators[u]` lists the
/// candidates whose cover row contains u.
struct CoverProblem {
    std::size_t universe = 0;
    std::vector<Bitset> cover;       // per candidate, width = universe
    std::vector<Bitset> dominators;  // per universe element, width = candidates
};

struct CoverSearch {
    const CoverProblem& p;
    Bitset universe_full;
    std::vector<int> best;
    bool has_witness = false;
    std::size_t limit;  // current best size (or budget+1 virtual incumbent)
    std::uint64_t nodes = 0;
    std::vector<int> chosen;
    Bitset excluded;

    explicit CoverSearch(const CoverProblem& prob, std::size_t initial_limit)
        : p(prob),
          universe_full(Bitset::full(prob.universe)),
          limit(initial_limit),
          excluded(prob.cover.size()) {}

    void run(const Bitset& covered) {
        ++nodes;
        if (covered == universe_full) {
            if (chosen.size() < limit) {
                best = chosen;
                has_witness = true;
                limit = chosen.size();
            }
            return;
        }
        if (chosen.size() + 1 >= limit) return;

        // One pass over the uncovered elements serves both the greedy-packing
        // lower bound (elements with pairwise disjoint candidate sets each
        // need a distinct pick) and branch selection (fewest candidates).
        Bitset blocked(p.cover.size());
        std::size_t packed = 0;
        std::size_t branch_u = Bitset::npos;
        std::size_t branch_avail = Bitset::npos;
        for (std::size_t u = 0; u < p.universe; ++u) {
            if (covered.test(u)) continue;
            const Bitset& dom = p.dominators[u];
            const std::size_t avail = dom.count() - dom.intersection_count(excluded);
            if (avail == 0) return;  // dead branch
            if (avail < branch_avail) {
                branch_avail = avail;
                branch_u = u;
            }
            if (!dom.intersects(blocked)) {
                ++packed;
                blocked |= dom;
            }
        }
        if (chosen.size() + packed >= limit) return;

        Bitset avail = p.dominators[branch_u];
        avail.subtract(excluded);
        std::vector<std::size_t> tried;
        avail.for_each([&](int c) {
            Bitset next = covered;
            next |= p.cover[static_cast<std::size_t>(c)];
            chosen.push_back(c);
            run(next);
            chosen.pop_back();
            excluded.set(static_cast<std::size_t>(c));
            tried.push_back(static_cast<std::size_t>(c));
        });
        for (auto c : tried) excluded.reset(c);
    }
};

SolveResult solve_min_cover(const CoverProblem& p, std::optional<int> budget,
                            std::span<const int> forced) {
    const std::size_t n_candidates = p.cover.size();
    for (std::size_t u = 0; u < p.universe; ++u)
        if (p.dominators[u].none())
            return {ExtendedNat::infinity(), std::nullopt, 0, true};

    Bitset base_covered(p.universe);
    std::vector<int> base;
    for (int f : forced) {
        if (f < 0 || static_cast<std::size_t>(f) >= n_candidates)
            throw std::invalid_argument("forced candidate out of range");
        if (std::find(base.begin(), base.end(), f) == base.end()) {
            base.push_back(f);
            base_covered |= p.cover[static_cast<std::size_t>(f)];
        }
    }
    std::sort(base.begin(), base.end());

    // Greedy max-coverage incumbent (ties broken by lowest index).
    std::vector<int> greedy = base;
    Bitset covered = base_covered;
    const Bitset full = Bitset::full(p.universe);
    while (!(covered == full)) {
        std::size_t best_gain = 0;
        int best_c = -1;
        for (std::size_t c = 0; c < n_candidates; ++c) {
            const std::size_t gain =
                p.cover[c].count() - p.cover[c].intersection_count(covered);
            if (gain > best_gain) {
                best_gain = gain;
                best_c = static_cast<int>(c);
            }
        }
        if (best_c < 0) return {ExtendedNat::infinity(), std::nullopt, 0, true};
        greedy.push_back(best_c);
        covered |= p.cover[static_cast<std::size_t>(best_c)];
    }

    std::size_t limit = greedy.size();
    bool have_incumbent = true;
    if (budget && greedy.size() > static_cast<std::size_t>(*budget)) {
        limit = static_cast<std::size_t>(*budget) + 1;
        have_incumbent = false;
    }

    CoverSearch search(p, limit);
    search.has_witness = have_incumbent;
    if (have_incumbent) search.best = greedy;
    search.chosen = base;
    search.run(base_covered);

    if (!search.has_witness)
        return {static_cast<std::uint64_t>(*budget) + 1, std::nullopt, search.nodes, false};

    std::sort(search.best.begin(), search.best.end());
    VertexSet witness(n_candidates);
    for (int c : search.best) witness.set(static_cast<std::size_t>(c));
    return {static_cast<std::uint64_t>(search.best.size()), witness, search.nodes, true};
}

CoverProblem closed_cover_problem(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    CoverProblem p;
    p.universe = n;
    p.cover.reserve(n);
    for (int v = 0; v < g.order(); ++v) p.cover.push_back(g.closed_neighborhood(v));
    p.dominators = p.cover;  // closed neighborhoods are symmetric
    return p;
}

CoverProblem open_cover_problem(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    CoverProblem p;
    p.universe = n;
    p.cover.reserve(n);
    for (int v = 0; v < g.order(); ++v) p.cover.push_back(g.open_neighborhood(v));
    p.dominators = p.cover;
    return p;
}

/// Universe doubled: element u demands closed coverage in g, element n+u
/// demands open coverage in the complement.
CoverProblem sdctd_cover_problem(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    CoverProblem p;
    p.universe = 2 * n;
    p.cover.reserve(n);
    p.dominators.reserve(2 * n);
    for (int v = 0; v < g.order(); ++v) {
        Bitset row(2 * n);
        row.or_shifted(g.closed_neighborhood(v), 0);
        row.or_shifted(g.closed_neighborhood(v).complemented(), n);
        p.cover.push_back(std::move(row));
    }
    for (int u = 0; u < g.order(); ++u) p.dominators.push_back(g.closed_neighborhood(u));
    for (int u = 0; u < g.order(); ++u)
        p.dominators.push_back(g.closed_neighborhood(u).complemented());
    return p;
}

CoverProblem product_cover_problem(const Graph& G, const Graph& H) {
    const std::size_t ng = static_cast<std::size_t>(G.order());
    const std::size_t nh = static_cast<std::size_t>(H.order());
    const std::size_t n = ng * nh;
    CoverProblem p;
    p.universe = n;
    p.cover.reserve(n);
    for (int g = 0; g < G.order(); ++g) {
        const Bitset& row_g = G.closed_neighborhood(g);
        for (int h = 0; h < H.order(); ++h) {
            const Bitset in = H.closed_neighborhood(h);
            const Bitset out = in.complemented();
            Bitset row(n);
            for (std::size_t g2 = 0; g2 < ng; ++g2)
                row.or_shifted(row_g.test(g2) ? in : out, g2 * nh);
            p.cover.push_back(std::move(row));
        }
    }
    p.dominators = p.cover;  // product domination is symmetric
    return p;
}

}  // namespace

SolveResult domination_number(const Graph& g) {
    return solve_min_cover(closed_cover_problem(g), std::nullopt, {});
}

SolveResult domination_number_with(const Graph& g, std::span<const int> forced) {
    for (int v : forced)
        if (v < 0 || v >= g.order()) throw std::out_of_range("forced vertex out of range");
    return solve_min_cover(closed_cover_problem(g), std::nullopt, forced);
}

SolveResult total_domination_number(const Graph& g) {
    return solve_min_cover(open_cover_problem(g), std::nullopt, {});
}

SolveResult sdctd_number(const Graph& g) {
    return solve_min_cover(sdctd_cover_problem(g), std::nullopt, {});
}

SolveResult product_domination_number(const Graph& G, const Graph& H,
                                      std::optional<int> budget) {
    if (static_cast<long long>(G.order()) * H.order() > kMaxVertices)
        throw std::invalid_argument("product exceeds the vertex cap");
    return solve_min_cover(product_cover_problem(G, H), budget, {});
}

namespace {

struct PackingSearch {
    const std::vector<Bitset>& conflict;
    std::vector<int> best;
    std::vector<int> chosen;
    std::uint64_t nodes = 0;

    void run(Bitset candidates) {
        ++nodes;
        if (chosen.size() > best.size()) best = chosen;
        if (chosen.size() + candidates.count() <= best.size()) return;
        const std::size_t v = candidates.find_first();
        if (v == Bitset::npos) return;
        // include v
        Bitset rest = candidates;
        rest.subtract(conflict[v]);
        chosen.push_back(static_cast<int>(v));
        run(rest);
        chosen.pop_back();
        // exclude v
        candidates.reset(v);
        run(std::move(candidates));
    }
};

}  // namespace

SolveResult packing_number(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    std::vector<Bitset> conflict;
    conflict.reserve(n);
    for (int v = 0; v < g.order(); ++v) {
        Bitset c(n);
        g.closed_neighborhood(v).for_each([&](int u) { c |= g.closed_neighborhood(u); });
        conflict.push_back(std::move(c));
    }
    PackingSearch s{conflict, {}, {}, 0};
    s.run(Bitset::full(n));
    VertexSet witness(n);
    for (int v : s.best) witness.set(static_cast<std::size_t>(v));
    return {static_cast<std::uint64_t>(s.best.size()), witness, s.nodes, true};
}

namespace {

struct EcdSearch {
    const Graph& g;
    std::optional<int> size;
    std::vector<int> chosen;
    std::optional<std::vector<int>> found;

    void run(const Bitset& covered) {
        if (found) return;
        if (covered == Bitset::full(static_cast<std::size_t>(g.order()))) {
            if (!size || chosen.size() == static_cast<std::size_t>(*size)) found = chosen;
            return;
        }
        if (size && chosen.size() >= static_cast<std::size_t>(*size)) return;

        // Uncovered vertex with the fewest admissible candidates.
        int pick = -1;
        std::size_t pick_count = Bitset::npos;
        std::vector<int> pick_candidates;
        for (int u = 0; u < g.order(); ++u) {
            if (covered.test(static_cast<std::size_t>(u))) continue;
            std::vector<int> cands;
            g.closed_neighborhood(u).for_each([&](int v) {
                if (!g.closed_neighborhood(v).intersects(covered)) cands.push_back(v);
            });
            if (cands.empty()) return;
            if (cands.size() < pick_count) {
                pick_count = cands.size();
                pick = u;
                pick_candidates = std::move(cands);
            }
        }
        (void)pick;
        for (int v : pick_candidates) {
            chosen.push_back(v);
            Bitset next = covered;
            next |= g.closed_neighborhood(v);
            run(next);
            chosen.pop_back();
            if (found) return;
        }
    }
};

std::optional<VertexSet> ecd_search(const Graph& g, std::optional<int> size) {
    EcdSearch s{g, size, {}, std::nullopt};
    s.run(Bitset(static_cast<std::size_t>(g.order())));
    if (!s.found) return std::nullopt;
    VertexSet d(static_cast<std::size_t>(g.order()));
    for (int v : *s.found) d.set(static_cast<std::size_t>(v));
    return d;
}

}  // namespace

std::optional<VertexSet> find_ecd_set(const Graph& g) { return ecd_search(g, std::nullopt); }

std::optional<VertexSet> find_ecd_set_of_size(const Graph& g, int size) {
    if (size < 0) throw std::invalid_argument("negative ECD size");
    return ecd_search(g, size);
}

bool is_sdctd(const Graph& g, const VertexSet& d) {
    return is_dominating(g, d) && is_total_dominating(g.complement(), d);
}

bool dominating_via_index_sets(const Graph& G, const Graph& H,
                               std::span<const ProductVertex> d) {
    const std::size_t k = d.size();
    if (k > 20) throw std::invalid_argument("index-set check limited to 20 set members");
    for (const auto& v : d)
        if (v.g < 0 || v.g >= G.order() || v.h < 0 || v.h >= H.order())
            throw std::out_of_range("product vertex out of range");

    // The set is not dominating exactly when some (g,h) realizes a split
    // I = {i : g_i in N[g]} with {i : h_i in N[h]} = [k] \ I. Membership is
    // per index, so repeated coordinates stay sound; only realized index
    // masks matter, no power-set sweep needed.
    std::unordered_set<std::uint32_t> h_masks;
    for (int h = 0; h < H.order(); ++h) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (H.closed_neighborhood(d[i].h).test(static_cast<std::size_t>(h)))
                m |= std::uint32_t{1} << i;
        h_masks.insert(m);
    }
    const std::uint32_t all = k == 32 ? ~std::uint32_t{0}
                                      : ((std::uint32_t{1} << k) - 1);
    for (int g = 0; g < G.order(); ++g) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (G.closed_neighborhood(d[i].g).test(static_cast<std::size_t>(g)))
                m |= std::uint32_t{1} << i;
        if (h_masks.count(~m & all)) return false;
    }
    return true;
}

}  // namespace moddom
