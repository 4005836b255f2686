#include "kgturan/alternation.hpp"

#include "kgturan/errors.hpp"
#include "kgturan/exact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace kgturan {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

std::vector<Mask> masks_of(const Hypergraph& rep)
{
    std::vector<Mask> out;
    for (const auto& e : rep.edges()) {
        Mask m = 0;
        for (auto v : e)
            m |= bit(v);
        out.push_back(m);
    }
    return out;
}

// The condition on (plus, minus) masks. Monotone under shrinking either side.
class Condition {
public:
    Condition(const Hypergraph& rep, std::size_t level, bool strong)
        : masks_(masks_of(rep)), level_(level), strong_(strong)
    {
    }

    bool operator()(Mask plus, Mask minus) const
    {
        if (strong_)
            return !(contains_edge(plus) && contains_edge(minus));
        if (level_ == 1)
            return !contains_edge(plus) && !contains_edge(minus);
        std::vector<Mask> inside;
        for (auto e : masks_)
            if ((e & plus) == e || (e & minus) == e)
                inside.push_back(e);
        std::size_t colours = level_ - 1;
        if (inside.size() <= colours)
            return true;
        if (colours == 1) {
            for (std::size_t a = 0; a < inside.size(); ++a)
                for (std::size_t b = a + 1; b < inside.size(); ++b)
                    if (!(inside[a] & inside[b]))
                        return false;
            return true;
        }
        std::vector<std::vector<VertexId>> kg;
        for (VertexId a = 0; a < inside.size(); ++a)
            for (VertexId b = a + 1; b < inside.size(); ++b)
                if (!(inside[a] & inside[b]))
                    kg.push_back({a, b});
        return is_k_colorable(Hypergraph(inside.size(), std::move(kg)), colours);
    }

private:
    bool contains_edge(Mask side) const
    {
        return std::any_of(masks_.begin(), masks_.end(), [&](Mask e) { return (e & side) == e; });
    }

    std::vector<Mask> masks_;
    std::size_t level_;
    bool strong_;
};

// Increasing positions with alternating signs, first sign +.
class SubsequenceSearch {
public:
    SubsequenceSearch(const Condition& ok, const LinearOrdering& sigma, std::size_t target)
        : ok_(ok), sigma_(sigma), n_(sigma.size()), target_(target), current_(n_, 0)
    {
    }

    std::size_t run()
    {
        expand(0, 0, 0, +1, 0);
        return best_;
    }
    const std::vector<int>& best_vector() const { return best_vector_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void expand(std::size_t from, Mask plus, Mask minus, int sign, std::size_t count)
    {
        ++nodes_;
        if (count > best_) {
            best_ = count;
            best_vector_ = current_;
        }
        for (std::size_t p = from; p < n_; ++p) {
            if (best_ >= target_ || count + (n_ - p) <= best_)
                return;
            Mask v = bit(sigma_.at(p));
            Mask np = sign > 0 ? plus | v : plus;
            Mask nm = sign > 0 ? minus : minus | v;
            if (!ok_(np, nm))
                continue;
            current_[p] = sign;
            expand(p + 1, np, nm, -sign, count + 1);
            current_[p] = 0;
        }
    }

    const Condition& ok_;
    const LinearOrdering& sigma_;
    std::size_t n_;
    std::size_t target_;
    std::vector<int> current_;
    std::vector<int> best_vector_;
    std::size_t best_ = 0;
    std::uint64_t nodes_ = 0;
};

void check_inputs(const Hypergraph& rep, const LinearOrdering& sigma, std::size_t cap)
{
    if (rep.num_vertices() > cap)
        throw_cap("representation vertices for the sign-vector search", rep.num_vertices(), cap);
    if (sigma.size() != rep.num_vertices())
        throw InvalidArgument("ordering has " + std::to_string(sigma.size()) + " entries for " +
                              std::to_string(rep.num_vertices()) + " vertices");
}

AltResult subsequence_search(const Hypergraph& rep, const LinearOrdering& sigma, const Condition& ok,
                             const AltLimits& limits, std::size_t target)
{
    check_inputs(rep, sigma, std::min<std::size_t>(limits.max_vertices, 64));
    SubsequenceSearch search(ok, sigma, target);
    AltResult out;
    out.value = search.run();
    out.nodes = search.nodes();
    if (out.value > 0)
        out.witness = SignVector(search.best_vector());
    return out;
}

std::size_t raw_scan(const Hypergraph& rep, const LinearOrdering& sigma, const Condition& ok, const AltLimits& limits)
{
    check_inputs(rep, sigma, std::min<std::size_t>(limits.max_brute_vertices, 20));
    std::size_t n = rep.num_vertices();
    std::vector<int> x(n, 0);
    std::vector<int> permuted(n, 0);
    std::size_t best = 0;
    // Odometer over {0, +1, -1}^n.
    while (true) {
        std::size_t j = 0;
        while (j < n && x[j] == -1) {
            x[j] = 0;
            ++j;
        }
        if (j == n)
            break;
        x[j] = x[j] == 0 ? 1 : -1;
        Mask plus = 0, minus = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (x[v] > 0)
                plus |= bit(v);
            else if (x[v] < 0)
                minus |= bit(v);
        }
        for (std::size_t p = 0; p < n; ++p)
            permuted[p] = x[sigma.at(p)];
        std::size_t a = alt_of_sequence(permuted);
        if (a > best && ok(plus, minus))
            best = a;
    }
    return best;
}

Mask side_mask(const std::vector<std::uint32_t>& side, std::size_t n)
{
    Mask m = 0;
    for (auto v : side) {
        if (v >= n)
            throw InvalidArgument("signed pair element out of range");
        m |= bit(v);
    }
    return m;
}

std::size_t certificate_value(std::size_t n, std::size_t alternation, std::size_t i, bool strong)
{
    return strong ? n + 1 - alternation : n - alternation + i - 1;
}

void check_level(std::size_t i)
{
    if (i < 1)
        throw InvalidArgument("level i must be at least 1");
}

} // namespace

AltResult alt_sigma_level(const Hypergraph& rep, const LinearOrdering& sigma, std::size_t i, const AltLimits& limits)
{
    check_level(i);
    Condition ok(rep, i, false);
    return subsequence_search(rep, sigma, ok, limits, rep.num_vertices() + 1);
}

AltResult salt_sigma(const Hypergraph& rep, const LinearOrdering& sigma, const AltLimits& limits)
{
    Condition ok(rep, 1, true);
    return subsequence_search(rep, sigma, ok, limits, rep.num_vertices() + 1);
}

std::size_t alt_prime_sigma_level(const Hypergraph& rep, const LinearOrdering& sigma, std::size_t i,
                                  const AltLimits& limits)
{
    check_level(i);
    return raw_scan(rep, sigma, Condition(rep, i, false), limits);
}

std::size_t salt_prime_sigma(const Hypergraph& rep, const LinearOrdering& sigma, const AltLimits& limits)
{
    return raw_scan(rep, sigma, Condition(rep, 1, true), limits);
}

bool satisfies_level(const Hypergraph& rep, const SignedPair& sides, std::size_t i)
{
    check_level(i);
    if (rep.num_vertices() > 64)
        throw_cap("representation vertices", rep.num_vertices(), 64);
    Condition ok(rep, i, false);
    return ok(side_mask(sides.plus, rep.num_vertices()), side_mask(sides.minus, rep.num_vertices()));
}

bool satisfies_strong(const Hypergraph& rep, const SignedPair& sides)
{
    if (rep.num_vertices() > 64)
        throw_cap("representation vertices", rep.num_vertices(), 64);
    Condition ok(rep, 1, true);
    return ok(side_mask(sides.plus, rep.num_vertices()), side_mask(sides.minus, rep.num_vertices()));
}

AltermaticCertificate altermatic_certificate(const Hypergraph& rep, const LinearOrdering& sigma, std::size_t i,
                                             bool strong, const AltLimits& limits)
{
    check_level(i);
    AltResult r = strong ? salt_sigma(rep, sigma, limits) : alt_sigma_level(rep, sigma, i, limits);
    AltermaticCertificate cert;
    cert.representation = rep;
    cert.level = i;
    cert.strong = strong;
    cert.ordering = sigma;
    cert.alternation = r.value;
    cert.value = certificate_value(rep.num_vertices(), r.value, i, strong);
    cert.witness = r.witness;
    return cert;
}

AltermaticCertificate best_altermatic_certificate(const Hypergraph& rep, std::size_t i, bool strong,
                                                  const AltLimits& limits)
{
    check_level(i);
    std::size_t n = rep.num_vertices();
    if (n > limits.max_ordering_vertices)
        throw_cap("representation vertices for the ordering scan", n, limits.max_ordering_vertices);
    Condition ok(rep, i, strong);
    std::vector<std::uint32_t> seq(n);
    std::iota(seq.begin(), seq.end(), 0U);
    std::size_t best = n + 1;
    std::vector<std::uint32_t> best_seq = seq;
    do {
        if (n > 1 && seq.front() > seq.back())
            continue;
        LinearOrdering sigma(seq);
        SubsequenceSearch search(ok, sigma, best);
        std::size_t value = search.run();
        if (value < best) {
            best = value;
            best_seq = seq;
        }
        // alt is at least 1 whenever some vertex is not a singleton hyperedge.
        if (best <= 1)
            break;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return altermatic_certificate(rep, LinearOrdering(best_seq), i, strong, limits);
}

bool verify_altermatic(const AltermaticCertificate& cert, const AltLimits& limits)
{
    const auto& rep = cert.representation;
    std::size_t n = rep.num_vertices();
    if (cert.ordering.size() != n || cert.level < 1)
        return false;
    std::size_t i = cert.strong ? 2 : cert.level;
    if (cert.alternation > n || cert.value != certificate_value(n, cert.alternation, i, cert.strong))
        return false;
    if (cert.alternation > 0) {
        if (!cert.witness || cert.witness->size() != n || alt(*cert.witness) != cert.alternation)
            return false;
        SignedPair sides = apply_ordering(*cert.witness, cert.ordering);
        bool ok = cert.strong ? satisfies_strong(rep, sides) : satisfies_level(rep, sides, cert.level);
        if (!ok)
            return false;
    }
    std::size_t recomputed;
    if (n <= limits.max_brute_vertices)
        recomputed = cert.strong ? salt_prime_sigma(rep, cert.ordering, limits)
                                 : alt_prime_sigma_level(rep, cert.ordering, cert.level, limits);
    else
        recomputed = cert.strong ? salt_sigma(rep, cert.ordering, limits).value
                                 : alt_sigma_level(rep, cert.ordering, cert.level, limits).value;
    return recomputed == cert.alternation;
}

} // namespace kgturan
