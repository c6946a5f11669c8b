#include <doctest.h>

#include <random>

#include "moddom/characterization.hpp"
#include "moddom/families.hpp"
#include "moddom/products.hpp"
#include "oracles.hpp"

using namespace moddom;

namespace {
Graph path(int n) { return generate({FamilyKind::Path, n, 0, 0}); }
Graph cycle(int n) { return generate({FamilyKind::Cycle, n, 0, 0}); }
Graph complete(int n) { return generate({FamilyKind::Complete, n, 0, 0}); }
Graph petersen() { return generate({FamilyKind::Petersen, 0, 0, 0}); }
Graph star(int n) { return generate({FamilyKind::Star, n, 0, 0}); }
}  // namespace

TEST_CASE("indexed neighborhood sets") {
    const Graph p3 = path(3);
    const std::array<int, 2> d{0, 2};
    CHECK(A_set(p3, d, {2, 0b11}).to_vector() == std::vector<int>{1});
    CHECK(A_set(p3, d, {2, 0b00}).none());
    CHECK(a_indicator(p3, d, {2, 0b11}) == 1);
    CHECK(a_indicator(p3, d, {2, 0b00}) == 0);

    const Graph p = petersen();
    for (int v = 0; v < 10; ++v) {
        const auto nbrs = p.open_neighborhood(v).to_vector();
        CHECK(A_set(p, nbrs, {3, 0b111}).to_vector() == std::vector<int>{v});
    }

    const std::array<int, 2> repeated{1, 1};
    CHECK_THROWS_AS((void)A_set(p3, repeated, {2, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)A_set(p3, d, {3, 0}), std::invalid_argument);
}

TEST_CASE("value-one characterization") {
    CHECK(equals_one(star(3), complete(4)));
    CHECK_FALSE(equals_one(cycle(4), complete(4)));
    CHECK(equals_one(complete(1), complete(1)));
}

TEST_CASE("value-two characterization") {
    CHECK(equals_two(path(4), petersen()) == "two(ii)");
    CHECK(equals_two(path(4), complete(3)) == "two(i)");
    CHECK_FALSE(equals_two(cycle(4), cycle(4)).has_value());
}

TEST_CASE("at-least-three test") {
    CHECK(at_least_three(cycle(4), cycle(4)));
    CHECK_FALSE(at_least_three(path(4), petersen()));
    CHECK(at_least_three(petersen(), petersen()));
}

TEST_CASE("value-three characterization") {
    // gamma(C4)+gamma(C4)=4 wins under the fixed clause order
    CHECK(equals_three(cycle(4), cycle(4)) == "dom3(i)");
    CHECK(equals_three(petersen(), petersen()) == "dom3(iv)");
    CHECK_FALSE(equals_three(path(10), petersen()).has_value());
    CHECK_THROWS_AS(equals_three(path(4), path(4)), std::invalid_argument);

    // both diameters at least three
    CHECK(equals_three(path(17), cycle(16)) == "dom3(iii)");
}

TEST_CASE("classification cascade") {
    CHECK(classify(complete(3), complete(3)).klass == GammaClass::Eq1);
    CHECK(classify(cycle(4), cycle(4)).klass == GammaClass::Eq3);
    CHECK(classify(path(10), petersen()).klass == GammaClass::Ge4);
    CHECK(classify(path(4), petersen()).klass == GammaClass::Eq2);

    const auto v = classify(petersen(), petersen());
    CHECK(v.klass == GammaClass::Eq3);
    CHECK(v.condition == "dom3(iv)");
    const auto& dg = v.witnesses.at("triple_g");
    const auto& dh = v.witnesses.at("triple_h");
    std::vector<ProductVertex> diag;
    for (std::size_t i = 0; i < 3; ++i) diag.push_back({dg[i], dh[i]});
    CHECK(dominating_via_index_sets(petersen(), petersen(), diag));
}

TEST_CASE("classification agrees with enumeration") {
    std::mt19937_64 rng(555);
    for (int i = 0; i < 80; ++i) {
        const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 5));
        const Graph h = random_graph(rng, 1 + static_cast<int>(rng() % 5));
        const auto verdict = classify(g, h, CrossCheck::Off);
        const auto mirror = classify(h, g, CrossCheck::Off);
        CHECK(verdict.klass == mirror.klass);
        const auto brute = oracle::domination_number_capped(modular_product(g, h), 3);
        const GammaClass expect = !brute        ? GammaClass::Ge4
                                  : *brute == 1 ? GammaClass::Eq1
                                  : *brute == 2 ? GammaClass::Eq2
                                                : GammaClass::Eq3;
        CHECK(verdict.klass == expect);
    }
}

TEST_CASE("cross-check passes on known pairs") {
    CHECK_NOTHROW(classify(petersen(), petersen(), CrossCheck::Auto));
    CHECK_NOTHROW(classify(path(6), cycle(5), CrossCheck::Auto));
}
