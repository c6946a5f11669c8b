#include <doctest.h>

#include "moddom/domination.hpp"
#include "moddom/families.hpp"

using namespace moddom;

TEST_CASE("named generators") {
    const Graph p = generate(FamilySpec::parse("petersen"));
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);

    const Graph km = generate(FamilySpec::parse("kminusm:3"));
    CHECK(km.order() == 6);
    for (int v = 0; v < 6; ++v) CHECK(km.degree(v) == 4);
    CHECK_FALSE(km.adjacent(0, 1));
    CHECK_FALSE(km.adjacent(4, 5));

    const Graph q3 = generate(FamilySpec::parse("cube"));
    CHECK(q3.order() == 8);
    CHECK(q3.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);
    // bipartite by parity of the binary label
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (q3.adjacent(u, v))
                CHECK(__builtin_popcount(static_cast<unsigned>(u)) % 2 !=
                      __builtin_popcount(static_cast<unsigned>(v)) % 2);
}

TEST_CASE("spec text forms") {
    CHECK(FamilySpec::parse("path:10").to_string() == "path:10");
    CHECK(FamilySpec::parse("complement:path:8").complements == 1);
    CHECK_THROWS_AS(FamilySpec::parse("kbipminus:1:2"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("kminusm:0"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("cycle:2"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("petersen:4"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse(""), std::invalid_argument);
}

TEST_CASE("complement wrapper is bit exact") {
    const Graph direct = generate(FamilySpec::parse("complement:path:8"));
    CHECK(direct == generate(FamilySpec::parse("path:8")).complement());
    const Graph twice = generate(FamilySpec::parse("complement:complement:cycle:5"));
    CHECK(twice == generate(FamilySpec::parse("cycle:5")));
}

TEST_CASE("labeled enumeration") {
    auto count = [](int n, bool connected) {
        LabeledGraphStream s(n, connected);
        std::size_t c = 0;
        while (s.next()) ++c;
        return c;
    };
    CHECK(count(3, false) == 8);
    CHECK(count(4, false) == 64);
    CHECK(count(1, false) == 1);
    CHECK(count(4, true) == 38);  // labeled connected graphs on 4 vertices
    LabeledGraphStream one(1);
    CHECK(*one.next() == generate(FamilySpec::parse("complete:1")));
    CHECK_THROWS_AS(LabeledGraphStream(8), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraphStream(0), std::invalid_argument);
}

TEST_CASE("efficient closed domination across the named families") {
    for (const char* spec :
         {"cycle:6", "cycle:9", "path:4", "path:5", "path:6", "path:7", "path:8", "path:9",
          "cube", "cubeminus", "kbipminus:2:2", "kbipminus:2:3", "kbipminus:3:2",
          "kbipminus:3:3"}) {
        CAPTURE(spec);
        const Graph g = generate(FamilySpec::parse(spec));
        const auto d = find_ecd_set(g);
        REQUIRE(d.has_value());
        Bitset seen(static_cast<std::size_t>(g.order()));
        std::size_t covered = 0;
        bool overlap = false;
        d->for_each([&](int v) {
            if (g.closed_neighborhood(v).intersects(seen)) overlap = true;
            seen |= g.closed_neighborhood(v);
            covered += g.closed_neighborhood(v).count();
        });
        CHECK_FALSE(overlap);
        CHECK(covered == static_cast<std::size_t>(g.order()));
    }
}
