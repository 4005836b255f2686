#pragma once

#include "kgturan/hypergraph.hpp"
#include "kgturan/sign_vector.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kgturan {

struct AltLimits {
    std::size_t max_vertices = 20;       // alternating-subsequence search
    std::size_t max_brute_vertices = 12; // raw 3^n scans
    std::size_t max_ordering_vertices = 8;
};

struct AltResult {
    std::size_t value = 0;
    std::optional<SignVector> witness; // position-indexed; absent when value is 0
    std::uint64_t nodes = 0;
};

/// alt_sigma(rep, i): the largest alt(X) over sign vectors X with
/// chi(KG(rep restricted to (X+_sigma, X-_sigma))) <= i - 1. For i = 1 this says
/// neither side contains a hyperedge. 0 when no X qualifies.
AltResult alt_sigma_level(const Hypergraph& rep, const LinearOrdering& sigma, std::size_t i,
                          const AltLimits& limits = {});

/// salt_sigma(rep): the largest alt(X) such that at most one of X+_sigma, X-_sigma
/// contains a hyperedge.
AltResult salt_sigma(const Hypergraph& rep, const LinearOrdering& sigma, const AltLimits& limits = {});

/// alt'_sigma(rep, i) by scanning all 3^n - 1 vertex-indexed vectors x: the sides are
/// {v : x_v = +1} and {v : x_v = -1}, and alt is taken of (x_sigma(0), ..., x_sigma(n-1)).
std::size_t alt_prime_sigma_level(const Hypergraph& rep, const LinearOrdering& sigma, std::size_t i,
                                  const AltLimits& limits = {});
/// The same raw scan for the strong condition.
std::size_t salt_prime_sigma(const Hypergraph& rep, const LinearOrdering& sigma, const AltLimits& limits = {});

/// Whether the signed pair satisfies the level-i condition (or the strong one).
bool satisfies_level(const Hypergraph& rep, const SignedPair& sides, std::size_t i);
bool satisfies_strong(const Hypergraph& rep, const SignedPair& sides);

struct AltermaticCertificate {
    Hypergraph representation;
    std::size_t level = 1;
    bool strong = false;
    LinearOrdering ordering;
    std::size_t alternation = 0; // alt_sigma(rep, i) or salt_sigma(rep)
    std::size_t value = 0;       // |V| - alternation + i - 1, or |V| + 1 - alternation
    std::optional<SignVector> witness;
};

/// Lower bound for chi(KG(rep)) from one ordering.
AltermaticCertificate altermatic_certificate(const Hypergraph& rep, const LinearOrdering& sigma, std::size_t i,
                                             bool strong, const AltLimits& limits = {});

/// Minimises the alternation over every ordering of V(rep) (up to reversal),
/// giving the largest certificate value; capped at limits.max_ordering_vertices.
AltermaticCertificate best_altermatic_certificate(const Hypergraph& rep, std::size_t i, bool strong,
                                                  const AltLimits& limits = {});

/// Re-checks a certificate: the witness satisfies the condition with the stated
/// alternation, no vector does better (raw scan up to max_brute_vertices,
/// otherwise the subsequence search), and the value matches the formula.
bool verify_altermatic(const AltermaticCertificate& cert, const AltLimits& limits = {});

} // namespace kgturan
