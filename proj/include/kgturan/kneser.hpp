#pragma once

#include "kgturan/hypergraph.hpp"
#include "kgturan/patterns.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kgturan {

/// Dense symmetric 0/1 matrix, one bit row per vertex.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) { }

    std::size_t size() const { return n_; }
    void connect(std::size_t u, std::size_t v)
    {
        bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
    bool adjacent(std::size_t u, std::size_t v) const { return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U; }

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct KneserOptions {
    std::size_t max_rep_edges_pairs = 4096; // r = 2
    std::size_t max_rep_edges_tuples = 512; // r >= 3
    bool unlimited = false;
};

/// KG^r of a representation: vertices are the representation's hyperedge ids,
/// hyperedges are the r-sets of pairwise disjoint representation hyperedges,
/// listed in lexicographic order. For r = 2 the adjacency matrix is filled too.
struct KneserInstance {
    Hypergraph representation;
    int r = 2;
    Hypergraph result;
    AdjacencyMatrix adjacency; // empty unless r == 2
};

/// Throws InvalidArgument for r < 2 and CapExceeded past the option caps.
KneserInstance kneser_power(const Hypergraph& rep, int r, const KneserOptions& options = {});

enum class NamedKneser { kneser, schrijver, circular, generalized, permutation };

NamedKneser parse_named_kneser(const std::string& name);
std::string to_string(NamedKneser kind);

/// Parameters of the named families; unused fields stay zero.
///   kneser KG(n,k)         n >= 2k, k >= 1
///   schrijver SG(n,k)      n >= 2k, k >= 1, n >= 3
///   circular K_{n/d}       n >= 2d, d >= 1, n >= 3
///   generalized KG(n,k,s)  n >= k > s >= 0
///   permutation S_r(m,n)   m, n >= r >= 1
struct NamedKneserParams {
    int n = 0;
    int k = 0;
    int d = 0;
    int s = 0;
    int m = 0;
    int r = 0;
};

void validate_params(NamedKneser kind, const NamedKneserParams& p);

/// Host and pattern family of the Kneser representation of a named graph.
struct NamedRepresentation {
    Hypergraph host;
    PatternFamily family;
};
NamedRepresentation named_representation(NamedKneser kind, const NamedKneserParams& p);

/// The named graph built from its own definition (k-subsets, stable sets,
/// circular distances, partial permutations). Vertex labels describe the objects.
Hypergraph direct_named_graph(NamedKneser kind, const NamedKneserParams& p);

struct NamedKneserBuild {
    NamedKneser kind{};
    NamedKneserParams params;
    Hypergraph host;
    PatternFamily family;
    KneserInstance instance; // built through host + family + kneser_power
    Hypergraph direct;
    std::optional<std::vector<VertexId>> isomorphism; // instance.result -> direct, when searched
};

/// Builds the named graph through its representation. When the graph has at
/// most `iso_vertex_cap` vertices a bijection to the direct definition is searched.
NamedKneserBuild build_named_kneser(NamedKneser kind, const NamedKneserParams& p, std::size_t iso_vertex_cap = 16,
                                    const PatternOptions& pattern_options = {});

struct RepresentationCheck {
    bool isomorphic = false;
    std::vector<VertexId> bijection;
};

/// Exhaustive isomorphism check between the representation-built graph and the
/// direct definition. Throws CapExceeded above `max_vertices`.
RepresentationCheck verify_representation(NamedKneser kind, const NamedKneserParams& p,
                                          std::size_t max_vertices = 16);

} // namespace kgturan
