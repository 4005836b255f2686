#include "kgturan/errors.hpp"
#include "kgturan/exact.hpp"
#include "kgturan/families.hpp"
#include "kgturan/kneser.hpp"
#include "kgturan/patterns.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace kgturan;

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Hypergraph kg_of(const Hypergraph& host, const Hypergraph& pattern)
{
    return kneser_power(pattern_hypergraph(host, PatternFamily::single(pattern)), 2).result;
}

} // namespace

TEST_SUITE("exact") {

TEST_CASE("chromatic value ordering")
{
    CHECK(ChromaticValue(3) < ChromaticValue::unbounded());
    CHECK(ChromaticValue(2) < ChromaticValue(3));
    CHECK(ChromaticValue::unbounded() == ChromaticValue::unbounded());
    CHECK_THROWS(ChromaticValue::unbounded().value());
    CHECK(ChromaticValue::unbounded().to_string() == "unbounded");
}

TEST_CASE("independence and covering")
{
    auto p = pattern_hypergraph(complete_graph(4), PatternFamily::single(path_graph(2)));
    CHECK(independence_number(p).value == 2);
    CHECK(covering_number(p).value == 4);
    CHECK(independence_number(Hypergraph(5, {})).value == 5);
    CHECK(covering_number(Hypergraph(5, {})).value == 0);
    CHECK(covering_number(complete_graph(4)).value == 3);
    auto k5 = pattern_hypergraph(complete_graph(5), PatternFamily::single(cycle_graph(3)));
    CHECK(independence_number(k5).value == 6);
    SolverLimits tiny;
    tiny.max_vertices = 4;
    CHECK_THROWS_AS(independence_number(complete_graph(5), tiny), CapExceeded);
}

TEST_CASE("alpha plus beta equals the vertex count")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
        auto h = oracle::random_hypergraph(rng, 2 + rng() % 9, rng() % 10, 4);
        auto a = independence_number(h);
        auto b = covering_number(h);
        CHECK(a.value + b.value == h.num_vertices());
        CHECK(a.value == oracle::independence(h));
        CHECK(b.value == oracle::covering(h));
        CHECK(a.witness.size() == a.value);
        CHECK_FALSE(oracle::contains_edge(h, [&] {
            std::uint64_t m = 0;
            for (auto v : a.witness)
                m |= std::uint64_t{1} << v;
            return m;
        }()));
    }
}

TEST_CASE("graph chromatic numbers")
{
    CHECK(chromatic_number_graph(kneser_power(complete_uniform_hypergraph(5, 2), 2).result).value == ChromaticValue(3));
    auto sg = kneser_power(pattern_hypergraph(cycle_graph(6), PatternFamily::single(matching_graph(2))), 2).result;
    CHECK(chromatic_number_graph(sg).value == ChromaticValue(4));
    auto k4p2 = chromatic_number_graph(kg_of(complete_graph(4), path_graph(2)));
    CHECK(k4p2.value == ChromaticValue(4));
    CHECK(validate_coloring(kg_of(complete_graph(4), path_graph(2)), k4p2.coloring));
    CHECK(k4p2.clique.size() <= 4);
    CHECK_THROWS_AS(chromatic_number_graph(build_multigraph(complete_graph(2), 2)), InvalidArgument);
    CHECK_THROWS_AS(chromatic_number_graph(complete_uniform_hypergraph(4, 3)), InvalidArgument);
    CHECK(chromatic_number_graph(Hypergraph(3, {})).value == ChromaticValue(1));
}

TEST_CASE("hypergraph chromatic numbers")
{
    auto kg3 = kneser_power(matching_graph(7), 3);
    auto pairs = kneser_power(complete_uniform_hypergraph(7, 2), 3).result;
    auto chi = chromatic_number_hypergraph(pairs);
    CHECK(chi.value == ChromaticValue(2));
    CHECK(validate_coloring(pairs, chi.coloring));
    CHECK(kg3.result.num_edges() == 35);
    CHECK(chromatic_number_hypergraph(Hypergraph(3, {{0}, {0, 1}})).value.is_unbounded());
    CHECK(chromatic_number_hypergraph(Hypergraph(3, {{0, 1, 2}})).value == ChromaticValue(2));
    CHECK(chromatic_number_hypergraph(Hypergraph(0, {})).value == ChromaticValue(0));
}

TEST_CASE("chromatic numbers agree with brute force")
{
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        Hypergraph h = t % 2 ? oracle::random_graph(rng, 7, 0.5) : oracle::random_hypergraph(rng, 7, 8, 3);
        auto res = chromatic_number_hypergraph(h);
        auto expect = oracle::chromatic(h.num_vertices(), h.edges());
        if (expect == SIZE_MAX) {
            CHECK(res.value.is_unbounded());
            continue;
        }
        CHECK(res.value == ChromaticValue(expect));
        CHECK(validate_coloring(h, res.coloring));
        if (t % 2) {
            ColoringCertificate c;
            CHECK(is_k_colorable(h, expect, &c));
            if (expect > 1)
                CHECK_FALSE(is_k_colorable(h, expect - 1));
            CHECK(maximum_clique(h).size() <= expect);
        }
    }
}

TEST_CASE("cover colouring")
{
    auto rep = complete_uniform_hypergraph(5, 2);
    auto c = cover_coloring(rep, 2);
    CHECK(independence_number(rep).value == 1);
    CHECK(c.num_colors == 4);
    CHECK(validate_coloring(kneser_power(rep, 2).result, c));

    Hypergraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto s = cover_coloring(star, 2);
    CHECK(validate_coloring(kneser_power(star, 2).result, s));
    CHECK(s.num_colors == ceil_div(4 - independence_number(star).value, 1));

    auto c5 = cover_coloring(cycle_graph(5), 2);
    CHECK(c5.num_colors == 3);
    CHECK(validate_coloring(kneser_power(cycle_graph(5), 2).result, c5));
    CHECK_THROWS_AS(cover_coloring(rep, 2, std::vector<VertexId>{0, 1}), InvalidArgument);
}

TEST_CASE("alpha bounds on KG^r")
{
    std::mt19937_64 rng(47);
    int checked = 0;
    for (int t = 0; t < 80 && checked < 30; ++t) {
        auto rep = oracle::random_hypergraph(rng, 6, 4 + rng() % 7, 3);
        int r = 2 + t % 2;
        auto kg = kneser_power(rep, r).result;
        auto chi = chromatic_number_hypergraph(kg).value.value();
        std::size_t n = rep.num_vertices(), a = independence_number(rep).value;
        std::size_t rr = static_cast<std::size_t>(r);
        std::size_t lower = n > rr * a ? ceil_div(n - rr * a, rr - 1) : 0;
        CHECK(lower <= chi);
        CHECK(chi <= ceil_div(n - a, rr - 1));
        auto c = cover_coloring(rep, r);
        CHECK(c.num_colors == ceil_div(n - a, rr - 1));
        CHECK(validate_coloring(kg, c));
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("augmented representation")
{
    auto rep = complete_uniform_hypergraph(5, 2);
    auto kg = kneser_power(rep, 2).result;
    auto chi = chromatic_number_graph(kg);
    auto aug = augment_representation(rep, chi.coloring);
    CHECK(covering_number(aug).value == 3);
    CHECK(kneser_power(aug, 2).result == kg);

    Hypergraph star(4, {{0, 1}, {0, 2}});
    auto one = chromatic_number_hypergraph(kneser_power(star, 2).result);
    CHECK(covering_number(augment_representation(star, one.coloring)).value == 1);

    auto c5 = cycle_graph(5);
    auto c5chi = chromatic_number_graph(kneser_power(c5, 2).result);
    auto c5aug = augment_representation(c5, c5chi.coloring);
    CHECK(c5aug.num_vertices() == 8);
    CHECK(covering_number(c5aug).value == 3);

    ColoringCertificate bad{1, std::vector<int>(10, 0), ColoringKind::graph};
    CHECK_THROWS_AS(augment_representation(rep, bad), InvalidArgument);
}

TEST_CASE("chi of KG is at most beta and augmentation is tight")
{
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
        auto rep = oracle::random_hypergraph(rng, 6, 3 + rng() % 6, 3);
        auto kg = kneser_power(rep, 2).result;
        auto chi = chromatic_number_graph(kg);
        CHECK(chi.value.value() <= covering_number(rep).value);
        auto aug = augment_representation(rep, chi.coloring);
        CHECK(covering_number(aug).value == chi.value.value());
        CHECK(kneser_power(aug, 2).result == kg);
    }
}

}
