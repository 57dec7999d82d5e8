#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gallai/constructions.hpp"
#include "gallai/partition.hpp"
#include "oracles.hpp"

using namespace gallai;

TEST_CASE("extractor succeeds on 2-colorings") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = oracles::random_coloring(seed, 8, 2);
        const auto p = find_gallai_partition(g);
        REQUIRE(p.has_value());
        CHECK(p->num_parts() >= 2);
        CHECK(verify_partition(g, *p));
        for (Color c : p->palette) CHECK(c <= 2);
    }
}

TEST_CASE("extractor recovers pentagon blow-up parts") {
    const auto g = pentagon_blowup({11, 11, 11, 11, 11}, 1, 2, 3);
    const auto p = find_gallai_partition(g);
    REQUIRE(p.has_value());
    CHECK(p->num_parts() == 5);
    CHECK(p->palette == std::vector<Color>{2, 3});
    for (const auto& part : p->parts) CHECK(part.size() == 11);
    CHECK(verify_partition(g, *p));
}

TEST_CASE("extractor returns absent on a rainbow K_3") {
    ColoredComplete g(3, 3, 1);
    g.set_color(0, 1, 1);
    g.set_color(0, 2, 2);
    g.set_color(1, 2, 3);
    CHECK(!find_gallai_partition(g).has_value());
    ColoredComplete k1(1, 1);
    CHECK_THROWS_AS(find_gallai_partition(k1), std::invalid_argument);
}

TEST_CASE("verify_partition rejects a merged bichromatic boundary") {
    const auto g = pentagon_blowup({3, 3, 3, 3, 3}, 1, 2, 3);
    auto p = find_gallai_partition(g);
    REQUIRE(p.has_value());
    REQUIRE(verify_partition(g, *p));

    // Merge two parts whose boundary to the rest is now bichromatic.
    GallaiPartition bad;
    bad.parts.push_back(p->parts[0]);
    bad.parts[0].insert(bad.parts[0].end(), p->parts[1].begin(), p->parts[1].end());
    std::sort(bad.parts[0].begin(), bad.parts[0].end());
    for (int i = 2; i < p->num_parts(); ++i) bad.parts.push_back(p->parts[i]);
    const int t = static_cast<int>(bad.parts.size());
    bad.between.assign(t, std::vector<Color>(t, 0));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            bad.between[i][j] = bad.between[j][i] =
                g.color(bad.parts[i][0], bad.parts[j][0]);
    bad.palette = {2, 3};
    CHECK(!verify_partition(g, bad));
}

TEST_CASE("verify_partition treats gaps and overlaps as input errors") {
    ColoredComplete g(4, 2, 1);
    GallaiPartition p;
    p.parts = {{0, 1}, {1, 2, 3}};  // overlap
    p.between = {{0, 1}, {1, 0}};
    p.palette = {1};
    CHECK_THROWS_AS(verify_partition(g, p), std::invalid_argument);
    p.parts = {{0, 1}, {2}};  // gap
    CHECK_THROWS_AS(verify_partition(g, p), std::invalid_argument);
}

TEST_CASE("reduced graph of the pentagon blow-up is the 2-colored K_5") {
    const auto g = pentagon_blowup({4, 4, 4, 4, 4}, 1, 2, 3);
    const auto p = find_gallai_partition(g);
    REQUIRE(p.has_value());
    const auto r = reduced_graph(g, *p);
    CHECK(r.order() == 5);
    // Two complementary monochromatic 5-cycles: no monochromatic triangle.
    for (Vertex x = 0; x < 5; ++x)
        for (Vertex y = x + 1; y < 5; ++y)
            for (Vertex z = y + 1; z < 5; ++z) {
                const bool mono = r.color(x, y) == r.color(x, z) &&
                                  r.color(x, z) == r.color(y, z);
                CHECK(!mono);
            }
}

TEST_CASE("reduced graph degenerate cases") {
    ColoredComplete g(4, 2, 1);
    const auto p = find_gallai_partition(g);
    REQUIRE(p.has_value());
    const auto r = reduced_graph(g, *p);
    std::set<Color> used;
    for (Vertex i = 0; i < r.order(); ++i)
        for (Vertex j = i + 1; j < r.order(); ++j) used.insert(r.color(i, j));
    CHECK(used.size() <= 2);

    GallaiPartition two;
    two.parts = {{0, 1}, {2, 3}};
    two.between = {{0, 1}, {1, 0}};
    two.palette = {1};
    REQUIRE(verify_partition(g, two));
    const auto r2 = reduced_graph(g, two);
    CHECK(r2.order() == 2);
    CHECK(r2.color(0, 1) == 1);
}

TEST_CASE("random_gallai outputs are rainbow-free and partitionable") {
    CHECK(random_gallai(1, 1, 3).order() == 1);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const int N = 2 + static_cast<int>(seed % 11);
        const auto g = random_gallai(seed, N, 3);
        CHECK(!find_rainbow_triangle(g).has_value());
        const auto p = find_gallai_partition(g);
        REQUIRE(p.has_value());
        CHECK(verify_partition(g, *p));
    }
    const auto g30 = random_gallai(424242, 30, 4);
    CHECK(!find_rainbow_triangle(g30).has_value());
    CHECK(find_gallai_partition(g30).has_value());
}

TEST_CASE("random_gallai is deterministic in the seed") {
    CHECK(random_gallai(99, 20, 4) == random_gallai(99, 20, 4));
}

TEST_CASE("stability: n=36, r=8 pentagon blow-up satisfies the implication") {
    const auto g = pentagon_blowup({17, 17, 17, 17, 18}, 1, 2, 3);
    REQUIRE(g.order() == 86);
    const auto rep = check_star_stability(g, 36, 8);
    CHECK(rep.warnings.empty());
    CHECK(rep.holds_hypothesis);
    CHECK(rep.num_parts == 5);
    CHECK(rep.min_part_size == 17);
    CHECK(rep.min_between_degree_per_color == 34);
    CHECK(rep.conclusion_holds);
    CHECK(rep.implication_ok);
}

TEST_CASE("stability: n=22, r=4 hypothesis fails (vacuous)") {
    const auto g = pentagon_blowup({10, 10, 11, 11, 11}, 1, 2, 3);
    REQUIRE(g.order() == 53);
    const auto rep = check_star_stability(g, 22, 4);
    CHECK(!rep.holds_hypothesis);
    CHECK(rep.implication_ok);
}

TEST_CASE("stability: monochromatic K_53 fails the hypothesis") {
    ColoredComplete g(53, 1, 1);
    const auto rep = check_star_stability(g, 22, 4);
    CHECK(!rep.holds_hypothesis);
    CHECK(rep.implication_ok);
}

TEST_CASE("stability warnings for out-of-range parameters") {
    const auto g = pentagon_blowup({2, 2, 2, 2, 2}, 1, 2, 3);
    const auto rep = check_star_stability(g, 10, 3);
    CHECK(!rep.warnings.empty());
}
