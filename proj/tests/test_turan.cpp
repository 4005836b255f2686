#include "kgturan/errors.hpp"
#include "kgturan/exact.hpp"
#include "kgturan/families.hpp"
#include "kgturan/kneser.hpp"
#include "kgturan/patterns.hpp"
#include "kgturan/turan.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace kgturan;

namespace {

// K4 edges in lexicographic order: 0={0,1} 1={0,2} 2={0,3} 3={1,2} 4={1,3} 5={2,3}.
// Perfect matchings {01,23}, {02,13}, {03,12} listed pairwise.
LinearOrdering k4_matching_pairs() { return LinearOrdering({0, 5, 1, 4, 2, 3}); }

} // namespace

TEST_SUITE("turan") {

TEST_CASE("bound modes")
{
    CHECK(parse_bound_mode("exact") == BoundMode::exact);
    CHECK(parse_bound_mode("heuristic") == BoundMode::upper_bound);
    CHECK(to_string(BoundMode::lower_bound) == "lower-bound");
    CHECK_THROWS_AS(parse_bound_mode("approx"), InvalidArgument);
}

TEST_CASE("turan numbers")
{
    auto p2 = PatternFamily::single(path_graph(2));
    auto k4 = turan_number(complete_graph(4), p2);
    CHECK(k4.value == 2);
    CHECK(k4.mode == BoundMode::exact);
    CHECK(validate_turan_witness(complete_graph(4), p2, k4));

    CHECK(turan_number(complete_graph(5), PatternFamily::single(cycle_graph(3))).value == 6);
    auto doubled = build_multigraph(cycle_graph(3), 2);
    CHECK(turan_number(doubled, PatternFamily::single(cycle_graph(3))).value == 4);

    TuranOptions small;
    small.max_exact_edges = 5;
    CHECK_THROWS_AS(turan_number(complete_graph(4), p2, small), CapExceeded);
    auto greedy = turan_number(complete_graph(4), p2, small, true);
    CHECK(greedy.mode == BoundMode::lower_bound);
    CHECK(greedy.value <= 2);
    CHECK(validate_turan_witness(complete_graph(4), p2, greedy));
}

TEST_CASE("turan numbers agree with brute force")
{
    std::mt19937_64 rng(61);
    for (int t = 0; t < 30; ++t) {
        auto host = t % 3 == 2 ? oracle::random_hypergraph(rng, 5, 7, 3) : oracle::random_graph(rng, 6, 0.45);
        if (host.num_edges() == 0)
            continue;
        std::vector<Hypergraph> fam = {t % 3 == 2 ? Hypergraph(3, {{0, 1}, {1, 2}})
                                                  : (t % 2 ? path_graph(2) : cycle_graph(3))};
        auto rep = turan_number(host, PatternFamily(fam));
        CHECK(rep.value == oracle::ex(host, fam));
        CHECK(validate_turan_witness(host, PatternFamily(fam), rep));
    }
}

TEST_CASE("alternating turan numbers at a fixed ordering")
{
    auto p2 = PatternFamily::single(path_graph(2));
    auto rep = ex_alt_sigma(complete_graph(4), p2, k4_matching_pairs(), false);
    CHECK(rep.value == 2);
    REQUIRE(rep.coloring);
    CHECK(is_alternating(*rep.coloring));
    CHECK(validate_alternating_witness(complete_graph(4), p2, rep, false));

    auto never = PatternFamily::single(complete_graph(4));
    auto c5 = cycle_graph(5);
    CHECK(ex_alt_sigma(c5, never, LinearOrdering::identity(5), false).value == 5);

    auto m2 = PatternFamily::single(matching_graph(2));
    auto ex = turan_number(c5, m2).value;
    CHECK(ex == 2);
    CHECK(ex_alt_sigma(c5, m2, LinearOrdering::identity(5), false).value >= ex);
    CHECK(ex_alt_sigma(c5, m2, LinearOrdering::identity(5), false).value ==
          oracle::ex_alt_sigma(c5, {matching_graph(2)}, LinearOrdering::identity(5).sequence(), false));
}

TEST_CASE("worked example: ex_alt(K4, P2) = 2")
{
    auto p2 = PatternFamily::single(path_graph(2));
    auto best = ex_alt_min(complete_graph(4), p2, false);
    CHECK(best.value == 2);
    CHECK(best.mode == BoundMode::exact);
    CHECK(validate_alternating_witness(complete_graph(4), p2, best, false));
}

TEST_CASE("fixed-ordering searches agree with brute force")
{
    std::mt19937_64 rng(67);
    for (int t = 0; t < 30; ++t) {
        auto host = oracle::random_graph(rng, 5, 0.6);
        if (host.num_edges() < 2)
            continue;
        std::vector<Hypergraph> fam = {t % 2 ? path_graph(2) : matching_graph(2)};
        std::vector<std::uint32_t> s(host.num_edges());
        std::iota(s.begin(), s.end(), 0U);
        std::shuffle(s.begin(), s.end(), rng);
        for (bool strong : {false, true}) {
            auto rep = ex_alt_sigma(host, PatternFamily(fam), LinearOrdering(s), strong);
            CHECK(rep.value == oracle::ex_alt_sigma(host, fam, s, strong));
            CHECK(validate_alternating_witness(host, PatternFamily(fam), rep, strong));
        }
    }
}

TEST_CASE("ordering minimisation agrees with brute force")
{
    std::mt19937_64 rng(71);
    int done = 0;
    for (int t = 0; t < 60 && done < 12; ++t) {
        auto host = oracle::random_graph(rng, 5, 0.5);
        if (host.num_edges() < 2 || host.num_edges() > 6)
            continue;
        std::vector<Hypergraph> fam = {t % 2 ? path_graph(2) : matching_graph(2)};
        for (bool strong : {false, true})
            CHECK(ex_alt_min(host, PatternFamily(fam), strong).value == oracle::ex_alt_min(host, fam, strong));
        ++done;
    }
    CHECK(done == 12);
}

TEST_CASE("parallel ordering scan gives the same value")
{
    auto p2 = PatternFamily::single(path_graph(2));
    auto host = build_multigraph(cycle_graph(3), 2);
    OrderingSearch par;
    par.workers = 3;
    for (bool strong : {false, true})
        CHECK(ex_alt_min(host, p2, strong, par).value == ex_alt_min(host, p2, strong).value);
}

TEST_CASE("heuristic ordering search is tagged and reproducible")
{
    auto p2 = PatternFamily::single(path_graph(2));
    OrderingSearch h;
    h.mode = BoundMode::upper_bound;
    h.seed = 9;
    auto a = ex_alt_min(complete_graph(5), p2, false, h);
    auto b = ex_alt_min(complete_graph(5), p2, false, h);
    CHECK(a.mode == BoundMode::upper_bound);
    CHECK(a.value == b.value);
    CHECK(a.coloring->ordering == b.coloring->ordering);
    CHECK(validate_alternating_witness(complete_graph(5), p2, a, false));
    CHECK_THROWS_AS(ex_alt_min(complete_graph(5), p2, false), CapExceeded);
}

TEST_CASE("interval orderings")
{
    auto doubled = build_multigraph(cycle_graph(3), 2);
    auto sigma = interval_ordering(doubled);
    CHECK(sigma.size() == 6);
    for (const auto& cls : parallel_classes(doubled))
        CHECK(std::abs(static_cast<int>(sigma.position_of(cls[0])) - static_cast<int>(sigma.position_of(cls[1]))) ==
              1);
    auto tri = PatternFamily::single(cycle_graph(3));
    CHECK(ex_alt_sigma(doubled, tri, sigma, false).value == 4);
    CHECK(oracle::ex_alt_sigma(doubled, {cycle_graph(3)}, sigma.sequence(), false) == 4);

    auto simple = interval_ordering(cycle_graph(5));
    CHECK(simple.size() == 5);

    std::size_t mult[] = {2, 2, 1, 1};
    auto c4 = build_multigraph(cycle_graph(4), mult);
    auto tail = interval_ordering(c4, true);
    CHECK(tail.at(4) == 4);
    CHECK(tail.at(5) == 5);
    CHECK_THROWS_AS(interval_ordering(complete_uniform_hypergraph(4, 3)), InvalidArgument);
}

TEST_CASE("sandwich chains and chi bounds")
{
    std::mt19937_64 rng(73);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 30; ++t) {
        auto host = oracle::random_graph(rng, 5, 0.55);
        if (host.num_edges() < 2 || host.num_edges() > 7)
            continue;
        auto fam = PatternFamily::single(t % 2 ? path_graph(2) : matching_graph(2));
        std::size_t ex = turan_number(host, fam).value;
        std::size_t m = host.num_edges();
        if (ex == m)
            continue;
        std::size_t alt = ex_alt_min(host, fam, false).value;
        std::size_t salt = ex_alt_min(host, fam, true).value;
        CHECK(ex <= alt);
        CHECK(alt <= 2 * ex);
        CHECK(ex + 1 <= salt);
        CHECK(salt <= 2 * ex + 1);
        auto chi = chromatic_number_graph(kneser_power(pattern_hypergraph(host, fam), 2).result).value.value();
        CHECK(m - alt <= chi);
        CHECK(m + 1 - salt <= chi);
        CHECK(chi <= m - ex);
        ++checked;
    }
    CHECK(checked == 30);
}

TEST_CASE("free hosts saturate at the edge count")
{
    auto fam = PatternFamily::single(cycle_graph(3));
    auto c5 = cycle_graph(5);
    CHECK(turan_number(c5, fam).value == 5);
    CHECK(ex_alt_min(c5, fam, true).value == 5);
}

TEST_CASE("freeness oracle")
{
    FreenessOracle o(complete_graph(4), PatternFamily::single(path_graph(2)));
    CHECK(o.num_occurrences() == 12);
    CHECK(o.is_free(edge_set_mask(6, {0, 5})));
    CHECK_FALSE(o.is_free(edge_set_mask(6, {0, 1})));
    CHECK(o.stays_free(edge_set_mask(6, {0}), 5));
    CHECK_FALSE(o.stays_free(edge_set_mask(6, {0}), 1));
    CHECK_THROWS_AS(edge_set_mask(70, {0}), CapExceeded);
    CHECK(is_family_free(complete_graph(4), {0, 5}, PatternFamily::single(path_graph(2))));
}

}
