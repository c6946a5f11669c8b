// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. argv[1] must point at the moddom CLI binary (used by the
// determinism criterion).

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "moddom/bounds.hpp"
#include "moddom/characterization.hpp"
#include "moddom/domination.hpp"
#include "moddom/families.hpp"
#include "moddom/graph6.hpp"
#include "moddom/products.hpp"
#include "oracles.hpp"
#include "parallel.hpp"

using namespace moddom;

namespace {

int worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 4 : static_cast<int>(hw);
}

struct Criterion {
    std::string title;
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (details.size() < 12) details.push_back(what);
        }
    }
};

Graph family(const std::string& spec) { return generate(FamilySpec::parse(spec)); }

std::uint64_t gamma(const Graph& g) { return domination_number(g).value.value(); }

std::uint64_t product_gamma(const Graph& g, const Graph& h) {
    return product_domination_number(g, h).value.value();
}

std::vector<Graph> graphs_upto(int maxn) {
    std::vector<Graph> out;
    for (int n = 1; n <= maxn; ++n) {
        LabeledGraphStream s(n);
        while (auto g = s.next()) out.push_back(std::move(*g));
    }
    return out;
}

void criterion1_exact_values(Criterion& c) {
    const Graph p = family("petersen");
    c.require(product_gamma(p, p) == 3, "self-product of the Petersen graph must be 3");
    c.require(sdctd_number(p).value == ExtendedNat(4), "sdctd(Petersen) must be 4");
    c.require(gamma(p) == 3, "gamma(Petersen) must be 3");
    c.require(p.diameter() == ExtendedNat(2), "diam(Petersen) must be 2");

    std::mt19937_64 rng(20240807);
    const Graph c6 = family("cycle:6"), q3 = family("cube"), q3m = family("cubeminus"),
                k23m = family("kbipminus:2:3");
    int accepted = 0;
    while (accepted < 20) {
        const Graph g = random_connected_graph(rng, 4 + static_cast<int>(rng() % 3));
        if (g.universal_vertex()) continue;
        ++accepted;
        const std::string id = emit_graph6(g);
        c.require(product_gamma(g, c6) == 2, "gamma(G<>C6) != 2 for " + id);
        c.require(product_gamma(g, q3) == 2, "gamma(G<>Q3) != 2 for " + id);
        c.require(product_gamma(g, q3m) == 2, "gamma(G<>Q3-) != 2 for " + id);
        c.require(product_gamma(g, k23m) == 2, "gamma(G<>K23-) != 2 for " + id);
    }

    const auto all5 = graphs_upto(5);
    std::atomic<int> bad{0};
    detail::parallel_for(all5.size(), worker_count(), [&](std::size_t i) {
        const Graph& g = all5[i];
        const auto expect = gamma(g);
        for (int n = 2; n <= 3; ++n) {
            if (product_gamma(g, family("complete:" + std::to_string(n))) != expect) ++bad;
            if (product_gamma(g, family("star:" + std::to_string(n))) != expect) ++bad;
        }
    });
    c.require(bad == 0, "complete/star factor must keep gamma of the other factor (" +
                            std::to_string(bad.load()) + " violations)");

    c.require(product_gamma(family("path:12"), family("complement:path:8")) == 4,
              "gamma(P12 <> complement(P8)) must be 4");
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = product_domination_number(family("kminusm:3"), family("path:18"));
        const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        c.require(res.exact && res.value == ExtendedNat(6), "gamma(K6- <> P18) must be 6");
        c.require(secs <= 600, "K6- <> P18 exceeded the ten-minute budget");
        c.require(res.nodes_explored > 0, "K6- <> P18 must come from the search");
    }
    c.require(product_gamma(family("path:10"), family("petersen")) == 4,
              "gamma(P10 <> Petersen) must be 4");
    c.require(product_gamma(family("cycle:10"), family("petersen")) == 4,
              "gamma(C10 <> Petersen) must be 4");

    c.require(sdctd_number(family("cycle:4")).value == ExtendedNat(3),
              "sdctd(C4) stated as 3; computed " +
                  sdctd_number(family("cycle:4")).value.to_string());
    c.require(sdctd_number(family("cycle:5")).value == ExtendedNat(3), "sdctd(C5) must be 3");
    for (int k = 6; k <= 12; ++k)
        c.require(sdctd_number(family("cycle:" + std::to_string(k))).value ==
                      ExtendedNat(static_cast<std::uint64_t>((k + 2) / 3)),
                  "sdctd(C" + std::to_string(k) + ") must be ceil(k/3)");
}

struct PairPopulation {
    std::vector<Graph> graphs;           // everything up to order 4
    std::vector<std::pair<int, int>> pairs;  // exhaustive 4x4 plus 500 sampled at n=5
    std::vector<Graph> sampled;          // the order-5 samples, appended after `graphs`

    const Graph& left(std::size_t i) const {
        const int a = pairs[i].first;
        return a >= 0 ? graphs[static_cast<std::size_t>(a)]
                      : sampled[static_cast<std::size_t>(-a - 1)];
    }
    const Graph& right(std::size_t i) const {
        const int b = pairs[i].second;
        return b >= 0 ? graphs[static_cast<std::size_t>(b)]
                      : sampled[static_cast<std::size_t>(-b - 1)];
    }
};

PairPopulation build_population() {
    PairPopulation p;
    p.graphs = graphs_upto(4);
    const int n = static_cast<int>(p.graphs.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) p.pairs.push_back({a, b});
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 500; ++i) {
        p.sampled.push_back(random_graph(rng, 5));
        p.sampled.push_back(random_graph(rng, 5));
        const int a = -static_cast<int>(p.sampled.size()) + 1;
        p.pairs.push_back({a, a + 1});
    }
    return p;
}

void criterion2_characterization(Criterion& c, const PairPopulation& pop) {
    std::atomic<int> mismatches{0};
    detail::parallel_for(pop.pairs.size(), worker_count(), [&](std::size_t i) {
        const Graph& g = pop.left(i);
        const Graph& h = pop.right(i);
        const auto verdict = classify(g, h, CrossCheck::Off);
        const auto brute = oracle::domination_number_capped(modular_product(g, h), 3);
        const GammaClass expect = !brute        ? GammaClass::Ge4
                                  : *brute == 1 ? GammaClass::Eq1
                                  : *brute == 2 ? GammaClass::Eq2
                                                : GammaClass::Eq3;
        if (verdict.klass != expect) ++mismatches;
    });
    c.require(mismatches == 0,
              std::to_string(mismatches.load()) + " classification mismatches");
}

void criterion3_bounds(Criterion& c, const PairPopulation& pop) {
    std::atomic<int> violations{0};
    detail::parallel_for(pop.pairs.size(), worker_count(), [&](std::size_t i) {
        const Graph& g = pop.left(i);
        const Graph& h = pop.right(i);
        const auto report = best_upper_bound(g, h);
        const Graph m = modular_product(g, h);
        const int exact = *oracle::domination_number_capped(m, m.order());
        bool ok = report.lower <= exact &&
                  ExtendedNat(static_cast<std::uint64_t>(exact)) <= report.upper;
        Bitset flat(static_cast<std::size_t>(m.order()));
        for (const auto& v : report.upper_witness)
            flat.set(static_cast<std::size_t>(flat_index(v, h.order())));
        ok = ok && is_dominating(m, flat) && dominating_via_index_sets(g, h, report.upper_witness);
        if (!ok) ++violations;
    });
    c.require(violations == 0, std::to_string(violations.load()) + " bound violations");
}

void criterion4_constructive(Criterion& c) {
    // staircase/snake theorem on 1000 random snakes with dominating projections
    std::atomic<int> snake_fail{0};
    std::atomic<int> snake_done{0};
    detail::parallel_for(1000, worker_count(), [&](std::size_t i) {
        std::mt19937_64 rng(0xabcdef ^ (7919 * (i + 1)));
        for (int attempt = 0; attempt < 4000; ++attempt) {
            const Graph g = random_connected_graph(rng, 2 + static_cast<int>(rng() % 5));
            const Graph h = random_connected_graph(rng, 2 + static_cast<int>(rng() % 5));
            const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                     g.order() + h.order()));
            Snake s;
            s.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(g.order())),
                         static_cast<int>(rng() % static_cast<std::uint64_t>(h.order()))});
            bool stuck = false;
            while (static_cast<int>(s.size()) < len && !stuck) {
                stuck = true;
                for (int t = 0; t < 16; ++t) {
                    ProductVertex next = s.back();
                    if (rng() & 1)
                        next.g = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
                    else
                        next.h = static_cast<int>(rng() % static_cast<std::uint64_t>(h.order()));
                    if (next == s.back()) continue;
                    if (std::find(s.begin(), s.end(), next) != s.end()) continue;
                    s.push_back(next);
                    stuck = false;
                    break;
                }
            }
            const auto [pg, ph] = projections(g, h, s);
            const bool cond = (is_dominating(g, pg) && is_dominating(h, ph)) ||
                              (is_total_dominating(g.complement(), pg) &&
                               is_total_dominating(h.complement(), ph));
            if (!cond) continue;
            if (!dominating_via_index_sets(g, h, s)) ++snake_fail;
            ++snake_done;
            return;
        }
    });
    c.require(snake_done == 1000, "snake sampling fell short: " +
                                      std::to_string(snake_done.load()) + "/1000");
    c.require(snake_fail == 0,
              std::to_string(snake_fail.load()) + " snakes with dominating projections failed");

    // rectangle reduction identity on 500 random instances
    std::atomic<int> rect_fail{0};
    detail::parallel_for(500, worker_count(), [&](std::size_t i) {
        std::mt19937_64 rng(0x5eed ^ (104729 * (i + 1)));
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 5));
        const Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 5));
        const int g1 = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
        const int g2 = (g1 + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                     g.order() - 1))) %
                       g.order();
        const int h1 = static_cast<int>(rng() % static_cast<std::uint64_t>(h.order()));
        const int h2 = (h1 + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                     h.order() - 1))) %
                       h.order();
        const Graph m = modular_product(g, h);
        Bitset cover4(static_cast<std::size_t>(m.order()));
        for (const auto& v : {ProductVertex{g1, h1}, {g1, h2}, {g2, h1}, {g2, h2}})
            cover4 |= m.closed_neighborhood(flat_index(v, h.order()));
        Bitset cover3(static_cast<std::size_t>(m.order()));
        for (const auto& v : reduce_rectangle(g, h, g1, g2, h1, h2))
            cover3 |= m.closed_neighborhood(flat_index(v, h.order()));
        if (!(cover4 == cover3)) ++rect_fail;
    });
    c.require(rect_fail == 0,
              std::to_string(rect_fail.load()) + " rectangle reductions changed the cover");

    // three-vertex witness for every pair of diameter->=3 graphs up to order 6
    std::vector<Graph> far;
    for (int n = 1; n <= 6; ++n) {
        LabeledGraphStream s(n);
        while (auto g = s.next())
            if (g->diameter() >= ExtendedNat(3)) far.push_back(std::move(*g));
    }
    std::atomic<int> diam3_fail{0};
    const std::size_t m = far.size();
    detail::parallel_for(m * m, worker_count(), [&](std::size_t i) {
        const Graph& g = far[i / m];
        const Graph& h = far[i % m];
        const auto w = diam3_construction(g, h);
        if (!w || w->size() != 3 || !dominating_via_index_sets(g, h, *w)) ++diam3_fail;
    });
    c.require(diam3_fail == 0, std::to_string(diam3_fail.load()) +
                                   " diameter-3 constructions failed over " +
                                   std::to_string(m * m) + " pairs");
}

void criterion5_complete_factor(Criterion& c) {
    const auto all5 = graphs_upto(5);
    std::atomic<int> bad{0};
    detail::parallel_for(all5.size() * 3, worker_count(), [&](std::size_t i) {
        const Graph& g = all5[i / 3];
        const int t = static_cast<int>(i % 3) + 1;
        const Graph k = family("complete:" + std::to_string(t));
        const Graph a = modular_product(g, k);
        const Graph b = strong_product(g, k);
        const Graph l = lexicographic_product(g, k);
        if (!are_isomorphic(a, b) || !are_isomorphic(b, l)) ++bad;
    });
    c.require(bad == 0, std::to_string(bad.load()) + " product isomorphism failures");
}

void criterion6_total2(Criterion& c) {
    std::atomic<long long> bad{0};
    for (int n = 1; n <= 7; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        detail::parallel_for(static_cast<std::size_t>(total), worker_count(), [&](std::size_t m) {
            const Graph g = graph_from_pair_mask(n, m);
            const Graph comp = g.complement();
            bool pair_total = false;
            for (int a = 0; a < n && !pair_total; ++a)
                for (int b = a + 1; b < n && !pair_total; ++b)
                    pair_total = (comp.open_neighborhood(a) | comp.open_neighborhood(b)).count() ==
                                 static_cast<std::size_t>(n);
            if ((g.diameter() >= ExtendedNat(3)) != pair_total) ++bad;
        });
    }
    c.require(bad == 0, std::to_string(bad.load()) + " equivalence failures up to order 7");
}

void criterion7_determinism(Criterion& c, const char* cli) {
    if (!cli) {
        c.require(false, "CLI path missing (pass it as argv[1])");
        return;
    }
    auto run_once = [&](const std::string& out) {
        const std::string cmd = std::string(cli) +
                                " verify --max-n 4 --seed 7 --threads 4 --output " + out;
        return std::system(cmd.c_str());
    };
    const int rc1 = run_once("acceptance_run1.jsonl");
    const int rc2 = run_once("acceptance_run2.jsonl");
    c.require(rc1 == 0 && rc2 == 0, "verify runs must exit cleanly");
    std::ifstream a("acceptance_run1.jsonl", std::ios::binary);
    std::ifstream b("acceptance_run2.jsonl", std::ios::binary);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    c.require(sa.str() == sb.str() && !sa.str().empty(), "reports must be byte-identical");
    std::remove("acceptance_run1.jsonl");
    std::remove("acceptance_run2.jsonl");
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    std::vector<Criterion> criteria(7);
    criteria[0].title = "exact published values";
    criteria[1].title = "characterization equivalence (exhaustive <=4, sampled =5)";
    criteria[2].title = "bound sandwich with doubly verified witnesses";
    criteria[3].title = "constructive theorems (snakes, rectangle, diameter-3)";
    criteria[4].title = "complete-factor product isomorphisms";
    criteria[5].title = "diameter >= 3 iff 2-element total domination of the complement";
    criteria[6].title = "byte-identical verify reports";

    const PairPopulation pop = build_population();
    criterion1_exact_values(criteria[0]);
    criterion2_characterization(criteria[1], pop);
    criterion3_bounds(criteria[2], pop);
    criterion4_constructive(criteria[3]);
    criterion5_complete_factor(criteria[4]);
    criterion6_total2(criteria[5]);
    criterion7_determinism(criteria[6], cli);

    int failing = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::printf("[%s] criterion %zu: %s\n", c.pass ? "PASS" : "FAIL", i + 1,
                    c.title.c_str());
        for (const auto& d : c.details) std::printf("    - %s\n", d.c_str());
        if (!c.pass) ++failing;
    }
    std::printf("%d/7 criteria passing\n", 7 - failing);
    return failing == 0 ? 0 : 1;
}
