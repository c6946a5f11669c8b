#include "moddom/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace moddom {

namespace {

void verify_witness_or_throw(const Graph& G, const Graph& H,
                             std::span<const ProductVertex> witness, const std::string& rule) {
    if (!dominating_via_index_sets(G, H, witness))
        throw std::logic_error("upper-bound rule '" + rule + "' produced a non-dominating set");
}

std::vector<int> ordered_witness(const SolveResult& r) { return r.witness->to_vector(); }

std::optional<std::pair<int, int>> first_far_pair(const Graph& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.distance(a, b) >= ExtendedNat(3)) return std::make_pair(a, b);
    return std::nullopt;
}

/// Adjacent pair with disjoint open neighborhoods whose union misses a
/// vertex; returns (a, b, missed).
std::optional<std::array<int, 3>> split_pair(const Graph& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
            if (!g.adjacent(a, b)) continue;
            if (g.open_neighborhood(a).intersects(g.open_neighborhood(b))) continue;
            Bitset uni = g.open_neighborhood(a) | g.open_neighborhood(b);
            if (uni.count() == static_cast<std::size_t>(g.order())) continue;
            const std::size_t missed = uni.complemented().find_first();
            return std::array<int, 3>{a, b, static_cast<int>(missed)};
        }
    return std::nullopt;
}

std::vector<ProductVertex> transpose(std::vector<ProductVertex> d) {
    for (auto& v : d) std::swap(v.g, v.h);
    return d;
}

}  // namespace

bool is_snake(std::span<const ProductVertex> d) {
    if (d.empty()) return false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i].g != d[i + 1].g && d[i].h != d[i + 1].h) return false;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[i] == d[j]) return false;  // ordered set: entries distinct
    return true;
}

std::pair<VertexSet, VertexSet> projections(const Graph& G, const Graph& H,
                                            std::span<const ProductVertex> d) {
    VertexSet pg(static_cast<std::size_t>(G.order()));
    VertexSet ph(static_cast<std::size_t>(H.order()));
    for (const auto& v : d) {
        if (v.g < 0 || v.g >= G.order() || v.h < 0 || v.h >= H.order())
            throw std::out_of_range("product vertex out of range");
        pg.set(static_cast<std::size_t>(v.g));
        ph.set(static_cast<std::size_t>(v.h));
    }
    return {pg, ph};
}

Snake build_snake(std::span<const int> dg, std::span<const int> dh) {
    if (dg.empty() || dh.empty()) throw std::invalid_argument("build_snake: empty vertex list");
    auto check_distinct = [](std::span<const int> l) {
        for (std::size_t i = 0; i < l.size(); ++i)
            for (std::size_t j = i + 1; j < l.size(); ++j)
                if (l[i] == l[j]) throw std::invalid_argument("build_snake: repeated vertex");
    };
    check_distinct(dg);
    check_distinct(dh);
    Snake s;
    s.push_back({dg[0], dh[0]});
    std::size_t i = 0, j = 0;
    while (i + 1 < dg.size() || j + 1 < dh.size()) {
        if (i + 1 < dg.size()) s.push_back({dg[++i], dh[j]});
        if (j + 1 < dh.size()) s.push_back({dg[i], dh[++j]});
    }
    return s;
}

CornerKind corner_kind(std::span<const ProductVertex> snake, std::size_t i) {
    if (snake.empty() || i >= snake.size()) throw std::out_of_range("corner index out of range");
    const bool prefix_g = i == 0 || snake[i].g == snake[i - 1].g;
    const bool prefix_h = i == 0 || snake[i].h == snake[i - 1].h;
    const bool suffix_g = i + 1 == snake.size() || snake[i].g == snake[i + 1].g;
    const bool suffix_h = i + 1 == snake.size() || snake[i].h == snake[i + 1].h;
    if (prefix_g && suffix_h) return CornerKind::GCorner;
    if (prefix_h && suffix_g) return CornerKind::HCorner;
    return CornerKind::None;
}

UpperCandidate snake_upper_bound(const Graph& G, const Graph& H) {
    const auto dg = ordered_witness(domination_number(G));
    const auto dh = ordered_witness(domination_number(H));
    Snake best = build_snake(dg, dh);
    verify_witness_or_throw(G, H, best, "basic_snake");

    const auto tg = total_domination_number(G.complement());
    const auto th = total_domination_number(H.complement());
    if (tg.value.is_finite() && th.value.is_finite()) {
        Snake alt = build_snake(ordered_witness(tg), ordered_witness(th));
        verify_witness_or_throw(G, H, alt, "basic_snake");
        if (alt.size() < best.size()) best = std::move(alt);
    }
    return {static_cast<std::uint64_t>(best.size()), "basic_snake", std::move(best)};
}

namespace {

std::optional<std::vector<ProductVertex>> corner_removal_one_side(const Graph& G, const Graph& H,
                                                                  std::span<const int> dg,
                                                                  std::span<const int> dh,
                                                                  bool mirrored) {
    const std::size_t k = dg.size(), t = dh.size();
    VertexSet dset(static_cast<std::size_t>(G.order()));
    for (int v : dg) dset.set(static_cast<std::size_t>(v));
    for (std::size_t i = 1; i <= std::min(k, t); ++i) {
        bool ok = true;
        for (int v = 0; v < G.order() && ok; ++v) {
            const std::size_t met = G.closed_neighborhood(v).intersection_count(dset);
            if (met == i || met == k - i) ok = false;
        }
        if (!ok) continue;
        Snake s = mirrored ? transpose(build_snake(dg, dh)) : build_snake(dg, dh);
        const ProductVertex removed =
            mirrored ? ProductVertex{dh[i - 1], dg[i - 1]} : ProductVertex{dg[i - 1], dh[i - 1]};
        std::vector<ProductVertex> out;
        for (const auto& v : s)
            if (!(v == removed)) out.push_back(v);
        return out;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<ProductVertex>> corner_removal(const Graph& G, const Graph& H,
                                                         std::span<const int> dg,
                                                         std::span<const int> dh) {
    if (auto w = corner_removal_one_side(G, H, dg, dh, false)) {
        verify_witness_or_throw(G, H, *w, "corner_removal");
        return w;
    }
    if (auto w = corner_removal_one_side(H, G, dh, dg, true)) {
        verify_witness_or_throw(G, H, *w, "corner_removal");
        return w;
    }
    return std::nullopt;
}

namespace {

struct LowerTerm {
    int value = 0;
    bool via_cor1 = false;
};

/// min(gamma(A), gamma_t(complement(B))), with the diameter shortcuts: a
/// universal vertex in B makes the second term infinite, diam(B) >= 3 pins it
/// to 2, and diam(B) = 2 pins it to >= 3 so gamma(A) <= 3 decides without a
/// solve.
LowerTerm lower_term(const Graph& A, const Graph& B) {
    const int gamma_a = static_cast<int>(domination_number(A).value.value());
    if (B.universal_vertex()) return {gamma_a, false};
    const ExtendedNat diam_b = B.diameter();
    if (diam_b >= ExtendedNat(3)) return {std::min(gamma_a, 2), false};
    if (gamma_a <= 3) return {gamma_a, true};
    const auto tt = total_domination_number(B.complement());
    return {static_cast<int>(std::min<std::uint64_t>(gamma_a, tt.value.value())), false};
}

}  // namespace

LowerBoundResult lower_bound_detailed(const Graph& G, const Graph& H) {
    const LowerTerm a = lower_term(G, H);
    const LowerTerm b = lower_term(H, G);
    const LowerTerm& win = (b.value > a.value) ? b : a;
    return {win.value, win.via_cor1 ? "cor1" : "lobound"};
}

int lower_bound(const Graph& G, const Graph& H) { return lower_bound_detailed(G, H).value; }

UpperCandidate sdctd_upper_bound(const Graph& G, const Graph& H) {
    UpperCandidate best{ExtendedNat::infinity(), "sdctd", {}};
    const auto sg = sdctd_number(G);
    if (sg.value.is_finite()) {
        std::vector<ProductVertex> w;
        for (int v : ordered_witness(sg)) w.push_back({v, 0});
        verify_witness_or_throw(G, H, w, "sdctd");
        best = {sg.value, "sdctd", std::move(w)};
    }
    const auto sh = sdctd_number(H);
    if (sh.value.is_finite() && sh.value < best.value) {
        std::vector<ProductVertex> w;
        for (int v : ordered_witness(sh)) w.push_back({0, v});
        verify_witness_or_throw(G, H, w, "sdctd");
        best = {sh.value, "sdctd", std::move(w)};
    }
    return best;
}

std::array<ProductVertex, 3> reduce_rectangle(const Graph& G, const Graph& H, int g1, int g2,
                                              int h1, int h2) {
    if (g1 < 0 || g1 >= G.order() || g2 < 0 || g2 >= G.order() || h1 < 0 || h1 >= H.order() ||
        h2 < 0 || h2 >= H.order())
        throw std::out_of_range("rectangle corner out of range");
    if (g1 == g2 || h1 == h2)
        throw std::invalid_argument("reduce_rectangle: coincident coordinates");
    return {ProductVertex{g1, h1}, ProductVertex{g1, h2}, ProductVertex{g2, h1}};
}

std::optional<std::vector<ProductVertex>> diam3_construction(const Graph& G, const Graph& H) {
    if (G.diameter() < ExtendedNat(3) || H.diameter() < ExtendedNat(3)) return std::nullopt;
    const auto pg = first_far_pair(G);
    const auto ph = first_far_pair(H);
    const auto rect = reduce_rectangle(G, H, pg->first, pg->second, ph->first, ph->second);
    std::vector<ProductVertex> w(rect.begin(), rect.end());
    verify_witness_or_throw(G, H, w, "diam3");
    return w;
}

namespace {

std::optional<std::vector<ProductVertex>> prop4_one_side(const Graph& G, const Graph& H) {
    if (G.diameter() < ExtendedNat(3)) return std::nullopt;
    const auto sp = split_pair(H);
    if (!sp) return std::nullopt;
    const auto [h1, h2, h3] = *sp;
    const auto pg = first_far_pair(G);
    const auto [g1, g2] = *pg;
    // 2x2 rectangle reduced by one corner, plus the row entry for the missed
    // vertex.
    std::vector<ProductVertex> w{{g1, h1}, {g1, h2}, {g2, h1}, {g1, h3}};
    return w;
}

}  // namespace

std::optional<std::vector<ProductVertex>> prop4_construction(const Graph& G, const Graph& H) {
    if (auto w = prop4_one_side(G, H)) {
        verify_witness_or_throw(G, H, *w, "prop4");
        return w;
    }
    if (auto w = prop4_one_side(H, G)) {
        auto t = transpose(std::move(*w));
        verify_witness_or_throw(G, H, t, "prop4");
        return t;
    }
    return std::nullopt;
}

std::optional<std::vector<ProductVertex>> izrok_construction(const Graph& G, const Graph& H) {
    const auto sg = split_pair(G);
    const auto sh = split_pair(H);
    if (!sg || !sh) return std::nullopt;
    const auto [g1, g2, g3] = *sg;
    const auto [h1, h2, h3] = *sh;
    std::vector<ProductVertex> w{{g1, h1}, {g1, h2}, {g2, h1}, {g2, h3}, {g3, h1}};
    verify_witness_or_throw(G, H, w, "izrok");
    return w;
}

namespace {

struct FactorData {
    SolveResult gamma;
    std::vector<int> gamma_set;
    SolveResult gamma_t_comp;
    SolveResult sdctd;
    ExtendedNat diam;
    std::optional<VertexSet> ecd;
    std::optional<int> universal;

    explicit FactorData(const Graph& g)
        : gamma(domination_number(g)),
          gamma_set(gamma.witness->to_vector()),
          gamma_t_comp(total_domination_number(g.complement())),
          sdctd(sdctd_number(g)),
          diam(g.diameter()),
          ecd(find_ecd_set(g)),
          universal(g.universal_vertex()) {}
};

struct Aggregator {
    const Graph& G;
    const Graph& H;
    std::optional<UpperCandidate> best;

    void offer(ExtendedNat value, const std::string& rule, std::vector<ProductVertex> witness) {
        verify_witness_or_throw(G, H, witness, rule);
        if (!best || value < best->value) best = UpperCandidate{value, rule, std::move(witness)};
    }
    void offer_sized(const std::string& rule, std::vector<ProductVertex> witness) {
        const auto size = static_cast<std::uint64_t>(witness.size());
        offer(size, rule, std::move(witness));
    }
};

std::vector<ProductVertex> column(const std::vector<int>& gs, int h) {
    std::vector<ProductVertex> w;
    for (int v : gs) w.push_back({v, h});
    return w;
}
std::vector<ProductVertex> row(int g, const std::vector<int>& hs) {
    std::vector<ProductVertex> w;
    for (int v : hs) w.push_back({g, v});
    return w;
}

}  // namespace

BoundReport best_upper_bound(const Graph& G, const Graph& H) {
    const FactorData fg(G);
    const FactorData fh(H);
    Aggregator agg{G, H, std::nullopt};

    // Universal vertex in one factor pins the value to gamma of the other.
    if (fh.universal) agg.offer_sized("univ", column(fg.gamma_set, *fh.universal));
    if (fg.universal) agg.offer_sized("univ", row(*fg.universal, fh.gamma_set));

    if (fg.ecd && fg.gamma.value >= ExtendedNat(2))
        agg.offer_sized("ecd", column(fg.ecd->to_vector(), 0));
    if (fh.ecd && fh.gamma.value >= ExtendedNat(2))
        agg.offer_sized("ecd", row(0, fh.ecd->to_vector()));

    // A minimum dominating set containing a distance->=3 pair works as a
    // column witness.
    auto case3 = [&](const Graph& A, const FactorData& fa, bool mirrored) {
        if (fa.diam < ExtendedNat(3)) return;
        for (int a = 0; a < A.order(); ++a)
            for (int b = a + 1; b < A.order(); ++b) {
                if (A.distance(a, b) < ExtendedNat(3)) continue;
                const std::array<int, 2> forced{a, b};
                const auto res = domination_number_with(A, forced);
                if (res.value == fa.gamma.value) {
                    auto set = res.witness->to_vector();
                    agg.offer_sized("case3", mirrored ? row(0, set) : column(set, 0));
                    return;
                }
            }
    };
    case3(G, fg, false);
    case3(H, fh, true);

    if (fg.diam >= ExtendedNat(5)) agg.offer_sized("diam5", column(fg.gamma_set, 0));
    if (fh.diam >= ExtendedNat(5)) agg.offer_sized("diam5", row(0, fh.gamma_set));

    {
        auto s = sdctd_upper_bound(G, H);
        if (s.value.is_finite()) agg.offer(s.value, s.rule, std::move(s.witness));
    }

    auto cor13 = [&](const Graph& A, const FactorData& fa, bool mirrored) {
        if (fa.diam < ExtendedNat(3)) return;
        const auto far = first_far_pair(A);
        std::vector<int> set = fa.gamma_set;
        for (int v : {far->first, far->second})
            if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
        std::sort(set.begin(), set.end());
        agg.offer_sized("cor13", mirrored ? row(0, set) : column(set, 0));
    };
    cor13(G, fg, false);
    cor13(H, fh, true);

    if (auto w = diam3_construction(G, H)) agg.offer_sized("diam3", std::move(*w));

    if (fg.gamma.value == ExtendedNat(2) && fh.gamma.value == ExtendedNat(2)) {
        const auto rect = reduce_rectangle(G, H, fg.gamma_set[0], fg.gamma_set[1], fh.gamma_set[0],
                                           fh.gamma_set[1]);
        agg.offer_sized("prop2", std::vector<ProductVertex>(rect.begin(), rect.end()));
    }

    if (auto w = prop4_construction(G, H)) agg.offer_sized("prop4", std::move(*w));
    if (auto w = izrok_construction(G, H)) agg.offer_sized("izrok", std::move(*w));

    {
        auto s = snake_upper_bound(G, H);
        agg.offer(s.value, s.rule, std::move(s.witness));
    }

    if (auto w = corner_removal(G, H, fg.gamma_set, fh.gamma_set))
        agg.offer_sized("corner_removal", std::move(*w));
    if (fg.gamma_t_comp.value.is_finite() && fh.gamma_t_comp.value.is_finite()) {
        if (auto w = corner_removal(G, H, fg.gamma_t_comp.witness->to_vector(),
                                    fh.gamma_t_comp.witness->to_vector()))
            agg.offer_sized("corner_removal", std::move(*w));
    }

    const auto low = lower_bound_detailed(G, H);
    BoundReport report;
    report.lower = low.value;
    report.lower_rule = low.rule;
    report.upper = agg.best->value;
    report.upper_rule = agg.best->rule;
    report.upper_witness = std::move(agg.best->witness);
    return report;
}

}  // namespace moddom
