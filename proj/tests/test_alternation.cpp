#include "kgturan/alternation.hpp"
#include "kgturan/errors.hpp"
#include "kgturan/exact.hpp"
#include "kgturan/families.hpp"
#include "kgturan/kneser.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace kgturan;

namespace {

Hypergraph stable_pairs(int n)
{
    std::vector<std::vector<VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (j - i <= n - 2)
                edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
    return Hypergraph(static_cast<std::size_t>(n), edges);
}

// vertices 1..5 -> 0..4, a..e -> 5..9
LinearOrdering interleaved() { return LinearOrdering({0, 5, 1, 6, 2, 7, 3, 8, 4, 9}); }

} // namespace

TEST_SUITE("alternation") {

TEST_CASE("stable pair representation")
{
    auto rep = stable_pairs(6);
    CHECK(rep.num_edges() == 9);
    auto id = LinearOrdering::identity(6);
    CHECK(alt_sigma_level(rep, id, 1).value == 3);
    CHECK(salt_sigma(rep, id).value == 3);
    auto cert = altermatic_certificate(rep, id, 1, true);
    CHECK(cert.value == 4);
    CHECK(verify_altermatic(cert));
}

TEST_CASE("five-cycle representations")
{
    auto f = cycle_graph(5);
    auto best = best_altermatic_certificate(f, 1, false);
    CHECK(best.alternation == 3);
    CHECK(best.value == 2);
    CHECK(verify_altermatic(best));

    auto h = f.with_isolated_vertices(5);
    auto a = alt_sigma_level(h, interleaved(), 1);
    CHECK(a.value == 7);
    REQUIRE(a.witness);
    CHECK(alt(*a.witness) == 7);
    CHECK(satisfies_level(h, apply_ordering(*a.witness, interleaved()), 1));
    CHECK(salt_sigma(h, interleaved()).value >= 7);
    auto cert = altermatic_certificate(h, interleaved(), 1, false);
    CHECK(cert.value == 3);
    CHECK(verify_altermatic(cert));
}

TEST_CASE("edge cases")
{
    Hypergraph singletons(3, {{0}, {1}, {2}});
    CHECK(alt_sigma_level(singletons, LinearOrdering::identity(3), 1).value == 0);
    CHECK(salt_sigma(Hypergraph(4, {}), LinearOrdering::identity(4)).value == 4);
    CHECK_THROWS_AS(alt_sigma_level(cycle_graph(5), LinearOrdering::identity(4), 1), InvalidArgument);
    CHECK_THROWS_AS(alt_sigma_level(cycle_graph(5), LinearOrdering::identity(5), 0), InvalidArgument);
    AltLimits tight;
    tight.max_vertices = 4;
    CHECK_THROWS_AS(alt_sigma_level(cycle_graph(5), LinearOrdering::identity(5), 1, tight), CapExceeded);
}

TEST_CASE("levels are ordered")
{
    std::mt19937_64 rng(83);
    for (int t = 0; t < 30; ++t) {
        auto rep = oracle::random_hypergraph(rng, 6, 2 + rng() % 5, 3);
        std::vector<std::uint32_t> s(6);
        std::iota(s.begin(), s.end(), 0U);
        std::shuffle(s.begin(), s.end(), rng);
        LinearOrdering sigma(s);
        auto a1 = alt_sigma_level(rep, sigma, 1).value;
        auto a2 = alt_sigma_level(rep, sigma, 2).value;
        auto st = salt_sigma(rep, sigma).value;
        CHECK(a1 <= a2);
        CHECK(a2 <= st);
    }
}

TEST_CASE("searches agree with the raw scan")
{
    std::mt19937_64 rng(89);
    for (int t = 0; t < 30; ++t) {
        auto rep = oracle::random_hypergraph(rng, 6, 2 + rng() % 5, 3);
        std::vector<std::uint32_t> s(6);
        std::iota(s.begin(), s.end(), 0U);
        std::shuffle(s.begin(), s.end(), rng);
        LinearOrdering sigma(s);
        for (std::size_t i : {1, 2, 3})
            CHECK(alt_sigma_level(rep, sigma, i).value == oracle::alt_sigma(rep, s, i, false));
        CHECK(salt_sigma(rep, sigma).value == oracle::alt_sigma(rep, s, 1, true));
        auto id = LinearOrdering::identity(6);
        CHECK(alt_prime_sigma_level(rep, id, 1) == alt_sigma_level(rep, id, 1).value);
        CHECK(salt_prime_sigma(rep, id) == salt_sigma(rep, id).value);
    }
}

TEST_CASE("minimum over orderings of alt and alt' agree")
{
    std::mt19937_64 rng(97);
    for (int t = 0; t < 6; ++t) {
        std::size_t n = 4 + t % 2;
        auto rep = oracle::random_hypergraph(rng, n, 2 + rng() % 4, 3);
        std::vector<std::uint32_t> s(n);
        std::iota(s.begin(), s.end(), 0U);
        for (std::size_t i : {1, 2}) {
            std::size_t a = SIZE_MAX, b = SIZE_MAX;
            do {
                LinearOrdering sigma(s);
                a = std::min(a, alt_sigma_level(rep, sigma, i).value);
                b = std::min(b, alt_prime_sigma_level(rep, sigma, i));
            } while (std::next_permutation(s.begin(), s.end()));
            CHECK(a == b);
        }
    }
}

TEST_CASE("certificates never exceed chi")
{
    std::mt19937_64 rng(101);
    for (int t = 0; t < 30; ++t) {
        auto rep = oracle::random_hypergraph(rng, 6, 3 + rng() % 5, 3);
        auto chi = chromatic_number_graph(kneser_power(rep, 2).result).value.value();
        std::size_t i = 1 + static_cast<std::size_t>(t) % 2;
        std::vector<std::uint32_t> s(6);
        std::iota(s.begin(), s.end(), 0U);
        std::shuffle(s.begin(), s.end(), rng);
        auto one = altermatic_certificate(rep, LinearOrdering(s), i, false);
        auto strong = altermatic_certificate(rep, LinearOrdering(s), 1, true);
        CHECK(one.value <= chi);
        CHECK(strong.value <= chi);
        CHECK(verify_altermatic(one));
        CHECK(verify_altermatic(strong));
    }
}

TEST_CASE("tampered certificates are rejected")
{
    auto cert = best_altermatic_certificate(cycle_graph(5), 1, false);
    auto bumped = cert;
    bumped.value += 1;
    CHECK_FALSE(verify_altermatic(bumped));
    auto shorter = cert;
    shorter.alternation -= 1;
    shorter.value += 1;
    CHECK_FALSE(verify_altermatic(shorter));
}

}
