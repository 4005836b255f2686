#include "kgturan/errors.hpp"
#include "kgturan/exact.hpp"
#include "kgturan/families.hpp"
#include "kgturan/harness.hpp"
#include "kgturan/kneser.hpp"
#include "kgturan/patterns.hpp"
#include "kgturan/turan.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace kgturan;

namespace {

Hypergraph kg_p2(const Hypergraph& g)
{
    return kneser_power(pattern_hypergraph(g, PatternFamily::single(path_graph(2))), 2).result;
}

} // namespace

TEST_SUITE("harness") {

TEST_CASE("P2 counts")
{
    CHECK(count_p2(complete_graph(4)).count == 12);
    CHECK(count_p2(complete_graph(4)).count ==
          enumerate_occurrences(complete_graph(4), PatternFamily::single(path_graph(2))).size());
    CHECK(count_p2(cycle_graph(5)).count == 5);
    CHECK(count_p2(star_graph(4)).count == 6);
    std::mt19937_64 rng(107);
    for (int t = 0; t < 30; ++t) {
        auto g = oracle::random_graph(rng, 3 + rng() % 6, 0.5);
        auto c = count_p2(g);
        CHECK(c.jensen_bound_holds);
        CHECK(c.count == oracle::occurrences(g, {path_graph(2)}).size());
    }
}

TEST_CASE("triangle factors")
{
    auto k4 = find_triangle_factor(complete_graph(4));
    REQUIRE(k4);
    CHECK(k4->components.size() == 2);
    for (const auto& c : k4->components)
        CHECK(c.kind == ComponentKind::k2);
    CHECK(validate_factor(complete_graph(4), *k4));

    auto k6 = find_triangle_factor(complete_graph(6));
    REQUIRE(k6);
    CHECK(k6->components.size() == 2);
    for (const auto& c : k6->components)
        CHECK(c.kind == ComponentKind::k3);

    CHECK_FALSE(find_triangle_factor(cycle_graph(5)));
    CHECK_THROWS_AS(find_triangle_factor(complete_graph(16)), CapExceeded);

    FactorWitness bad{{{ComponentKind::k3, {0, 1, 2}}}};
    CHECK_FALSE(validate_factor(complete_graph(4), bad));
}

TEST_CASE("path graph colourings")
{
    auto k4 = complete_graph(4);
    auto col = path_graph_coloring(k4, *find_triangle_factor(k4));
    CHECK(col.num_colors == 4);
    CHECK(validate_coloring(kg_p2(k4), col));
    CHECK(chromatic_number_graph(kg_p2(k4)).value == ChromaticValue(4));

    auto k6 = complete_graph(6);
    auto col6 = path_graph_coloring(k6, *find_triangle_factor(k6));
    CHECK(col6.num_colors == 11);
    CHECK(path_theorem_value(k6) == 11);
    CHECK(validate_coloring(kg_p2(k6), col6));

    CHECK(chromatic_number_graph(kg_p2(cycle_graph(5))).value == ChromaticValue(3));
    CHECK(path_theorem_value(cycle_graph(5)) == 2);

    FactorWitness bad{{{ComponentKind::k3, {0, 1, 2}}}};
    CHECK_THROWS_AS(path_graph_coloring(k4, bad), InvalidArgument);
}

TEST_CASE("path graph theorem on random graphs with factors")
{
    std::mt19937_64 rng(109);
    int with_factor = 0;
    for (int t = 0; t < 60; ++t) {
        auto g = oracle::random_graph(rng, 4 + rng() % 4, 0.75);
        if (!g.isolated_vertices().empty() || count_p2(g).count > 64)
            continue;
        auto f = find_triangle_factor(g);
        if (!f)
            continue;
        CHECK(validate_factor(g, *f));
        auto col = path_graph_coloring(g, *f);
        auto kg = kg_p2(g);
        CHECK(col.num_colors == path_theorem_value(g));
        CHECK(validate_coloring(kg, col));
        CHECK(chromatic_number_graph(kg).value == ChromaticValue(path_theorem_value(g)));
        ++with_factor;
    }
    CHECK(with_factor >= 10);
}

TEST_CASE("chi of KG(G, P2) lies between the Turan bounds")
{
    std::mt19937_64 rng(113);
    int checked = 0;
    for (int t = 0; t < 100 && checked < 30; ++t) {
        auto g = oracle::random_graph(rng, 3 + rng() % 6, 0.5);
        if (g.num_edges() == 0 || g.num_edges() > 14)
            continue;
        auto ex = turan_number(g, PatternFamily::single(path_graph(2))).value;
        auto chi = chromatic_number_graph(kg_p2(g)).value.value();
        CHECK(g.num_edges() <= chi + 2 * ex);
        CHECK(chi + ex <= g.num_edges());
        ++checked;
    }
    CHECK(checked == 30);
}

TEST_CASE("pairwise intersecting independent sets of KG(G, P2) are small")
{
    std::mt19937_64 rng(127);
    for (int t = 0; t < 30; ++t) {
        auto g = t == 0 ? complete_graph(6) : oracle::random_graph(rng, 4 + rng() % 3, 0.6);
        auto occ = enumerate_occurrences(g, PatternFamily::single(path_graph(2)));
        auto kg = kg_p2(g);
        std::size_t n = occ.size();
        if (n > 24)
            continue;
        std::vector<std::uint64_t> edge_mask(n);
        for (std::size_t i = 0; i < n; ++i)
            for (auto e : occ[i].edge_ids)
                edge_mask[i] |= std::uint64_t{1} << e;
        std::vector<std::uint32_t> adj(n);
        for (const auto& e : kg.edges()) {
            adj[e[0]] |= 1U << e[1];
            adj[e[1]] |= 1U << e[0];
        }
        std::size_t largest = 0;
        for (std::uint32_t s = 1; s < (1U << n); ++s) {
            std::uint64_t common = ~std::uint64_t{0};
            bool independent = true;
            for (std::size_t i = 0; i < n && independent; ++i)
                if (s >> i & 1U) {
                    independent = (adj[i] & s) == 0;
                    common &= edge_mask[i];
                }
            if (independent && common == 0)
                largest = std::max(largest, static_cast<std::size_t>(__builtin_popcount(s)));
        }
        CHECK(largest <= 3);
    }
}

TEST_CASE("golden manifest")
{
    const auto& m = golden_manifest();
    CHECK(m.version == "1");
    std::set<std::string> ids;
    for (const auto& c : m.cases)
        ids.insert(c.id);
    CHECK(ids.size() == m.cases.size());
    CHECK_THROWS_AS(run_golden_suite({"nonsense"}), InvalidArgument);
}

TEST_CASE("golden suite")
{
    auto report = run_golden_suite();
    CHECK(report.ok());
    for (const auto& c : report.cases) {
        INFO(c.id);
        if (c.status == CaseStatus::pass || c.status == CaseStatus::erratum || c.status == CaseStatus::info) {
            REQUIRE(c.computed);
            CHECK(c.coloring.num_colors == c.computed->value());
        }
        if (c.group != "probe")
            CHECK(c.status != CaseStatus::cap);
        if (c.id == "triangles-k5") {
            CHECK(c.status == CaseStatus::erratum);
            CHECK(*c.computed == ChromaticValue(3));
        }
    }
    CHECK(golden_report_table(report).find("recorded erratum") != std::string::npos);
    auto doc = nlohmann::json::parse(golden_report_json(report));
    CHECK(doc["cases"].size() == report.cases.size());
}

}
