#include <doctest.h>

#include <random>

#include "moddom/families.hpp"
#include "moddom/graph.hpp"
#include "moddom/graph6.hpp"
#include "moddom/products.hpp"

using namespace moddom;

namespace {
Graph path(int n) { return generate({FamilyKind::Path, n, 0, 0}); }
Graph cycle(int n) { return generate({FamilyKind::Cycle, n, 0, 0}); }
Graph complete(int n) { return generate({FamilyKind::Complete, n, 0, 0}); }
Graph petersen() { return generate({FamilyKind::Petersen, 0, 0, 0}); }

VertexSet vs(int n, std::initializer_list<int> bits) {
    VertexSet s(static_cast<std::size_t>(n));
    for (int b : bits) s.set(static_cast<std::size_t>(b));
    return s;
}
}  // namespace

TEST_CASE("closed and open neighborhoods") {
    const Graph p4 = path(4);
    CHECK(p4.closed_neighborhood(1) == vs(4, {0, 1, 2}));
    CHECK(p4.open_neighborhood(0) == vs(4, {1}));

    const Graph k1 = complete(1);
    CHECK(k1.closed_neighborhood(0) == vs(1, {0}));

    const Graph p = petersen();
    CHECK(p.closed_neighborhood(0) == vs(10, {0, 1, 4, 5}));

    const Graph c4 = cycle(4);
    CHECK(c4.open_neighborhood(0) == vs(4, {1, 3}));
    const Graph k4 = complete(4);
    CHECK(k4.open_neighborhood(2) == vs(4, {0, 1, 3}));

    CHECK_THROWS_AS((void)p4.open_neighborhood(4), std::out_of_range);
    CHECK_THROWS_AS((void)p4.closed_neighborhood(-1), std::out_of_range);
}

TEST_CASE("complement") {
    CHECK(complete(4).complement().edge_count() == 0);
    CHECK(are_isomorphic(cycle(5).complement(), cycle(5)));
    CHECK(are_isomorphic(path(4).complement(), path(4)));
}

TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8));
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("distance") {
    const Graph p4 = path(4);
    CHECK(p4.distance(0, 3) == ExtendedNat(3));
    CHECK(p4.distance(2, 2) == ExtendedNat(0));

    const Graph two_parts = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(two_parts.distance(0, 3).is_infinite());

    const Graph p = petersen();
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (!p.adjacent(u, v)) CHECK(p.distance(u, v) == ExtendedNat(2));
}

TEST_CASE("diameter") {
    CHECK(complete(5).diameter() == ExtendedNat(1));
    CHECK(cycle(6).diameter() == ExtendedNat(3));
    CHECK(petersen().diameter() == ExtendedNat(2));
    CHECK(complete(1).diameter() == ExtendedNat(0));
    CHECK(Graph::from_edges(3, {{0, 1}}).diameter().is_infinite());
}

TEST_CASE("universal vertex") {
    const Graph star = generate({FamilyKind::Star, 5, 0, 0});
    CHECK(star.universal_vertex() == 0);
    CHECK_FALSE(cycle(4).universal_vertex().has_value());
    CHECK(complete(3).universal_vertex() == 0);
}

TEST_CASE("private neighbors") {
    const Graph p4 = path(4);
    CHECK(p4.private_neighbors(0, vs(4, {0, 3})) == vs(4, {0, 1}));
    const Graph k3 = complete(3);
    CHECK(k3.private_neighbors(0, vs(3, {0, 1})).none());
    const Graph c6 = cycle(6);
    CHECK(c6.private_neighbors(3, vs(6, {0, 3})) == vs(6, {2, 3, 4}));
    CHECK_THROWS_AS((void)p4.private_neighbors(1, vs(4, {0, 3})), std::invalid_argument);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("graph6 fixed encodings") {
    CHECK(emit_graph6(complete(3)) == "Bw");
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(parse_graph6(">>graph6<<Bw") == complete(3));
}

TEST_CASE("graph6 round trip") {
    CHECK(parse_graph6(emit_graph6(petersen())) == petersen());
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 30));
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
    // the long order form
    const Graph p70 = path(70);
    const std::string enc = emit_graph6(p70);
    CHECK(enc[0] == '~');
    CHECK(parse_graph6(enc) == p70);
}

TEST_CASE("graph6 errors carry offsets") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);       // truncated payload
    CHECK_THROWS_AS(parse_graph6("Bw "), Graph6Error);     // bad character
    CHECK_THROWS_AS(parse_graph6("Bww"), Graph6Error);     // trailing data
    CHECK_THROWS_AS(parse_graph6("?"), Graph6Error);       // order zero
    try {
        parse_graph6("B\x01");
        CHECK(false);
    } catch (const Graph6Error& e) {
        CHECK(e.offset() == 1);
    }
}
