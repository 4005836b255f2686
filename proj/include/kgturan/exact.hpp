#pragma once

#include "kgturan/hypergraph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kgturan {

/// Chromatic number, or UNBOUNDED when some hyperedge is a singleton.
/// UNBOUNDED orders above every integer; asking for its numeric value throws.
class ChromaticValue {
public:
    ChromaticValue() = default;
    explicit ChromaticValue(std::size_t value) : value_(value) { }
    static ChromaticValue unbounded() { return ChromaticValue(std::nullopt); }

    bool is_unbounded() const { return !value_.has_value(); }
    std::size_t value() const;
    std::string to_string() const;

    friend std::strong_ordering operator<=>(const ChromaticValue& a, const ChromaticValue& b)
    {
        if (a.is_unbounded() || b.is_unbounded())
            return a.is_unbounded() <=> b.is_unbounded();
        return *a.value_ <=> *b.value_;
    }
    friend bool operator==(const ChromaticValue& a, const ChromaticValue& b) { return (a <=> b) == 0; }

private:
    explicit ChromaticValue(std::optional<std::size_t> v) : value_(v) { }
    std::optional<std::size_t> value_ = 0;
};

enum class ColoringKind { graph, hypergraph };

struct ColoringCertificate {
    std::size_t num_colors = 0;
    std::vector<int> assignment; // colour 0..num_colors-1 per vertex
    ColoringKind kind = ColoringKind::hypergraph;
};

/// Direct scan: every colour index in range and no hyperedge monochromatic
/// (for graphs: endpoints differ).
bool validate_coloring(const Hypergraph& h, const ColoringCertificate& c);

struct SolverLimits {
    std::size_t max_vertices = 64;
};

struct IndependenceResult {
    std::size_t value = 0;
    std::vector<VertexId> witness;
};

/// Maximum vertex set containing no hyperedge, by branch and bound.
IndependenceResult independence_number(const Hypergraph& h, const SolverLimits& limits = {});

struct CoverResult {
    std::size_t value = 0;
    std::vector<VertexId> witness;
};

/// Minimum vertex set meeting every hyperedge, found by its own hitting-set
/// search (not derived from the independence solver).
CoverResult covering_number(const Hypergraph& h, const SolverLimits& limits = {});

/// Maximum clique of a simple graph.
std::vector<VertexId> maximum_clique(const Hypergraph& g, const SolverLimits& limits = {});

struct ChromaticResult {
    ChromaticValue value;
    ColoringCertificate coloring;
    std::vector<VertexId> clique;             // graph lower-bound witness
    std::vector<std::size_t> refuted_colors;  // colour counts proven infeasible by exhaustive search
    std::uint64_t nodes = 0;
};

/// Exact chromatic number of a simple graph: DSATUR upper bound, clique lower
/// bound, then k-colourability search for each k in between. Throws
/// InvalidArgument on non-2-uniform or multigraph input.
ChromaticResult chromatic_number_graph(const Hypergraph& g, const SolverLimits& limits = {});

/// Least t admitting a t-colouring with no monochromatic hyperedge. 2-uniform
/// inputs are routed to the graph solver after dropping parallel copies.
ChromaticResult chromatic_number_hypergraph(const Hypergraph& h, const SolverLimits& limits = {});

/// Decides k-colourability of a simple graph; fills `coloring` on success.
bool is_k_colorable(const Hypergraph& g, std::size_t k, ColoringCertificate* coloring = nullptr,
                    const SolverLimits& limits = {});

/// Colouring of KG^r(rep) with ceil((|V| - |S|) / (r - 1)) colours: V \ S is cut into
/// consecutive parts of r-1 vertices and each hyperedge gets the index of the
/// first part it meets. `independent` must contain no hyperedge; when omitted a
/// maximum independent set is computed.
ColoringCertificate cover_coloring(const Hypergraph& rep, int r,
                                   const std::optional<std::vector<VertexId>>& independent = std::nullopt);

/// Adds one vertex per colour and extends each hyperedge e by the vertex of its
/// colour. Requires `coloring` to be proper for KG(rep); the result has the same
/// Kneser graph and its covering number is at most coloring.num_colors.
Hypergraph augment_representation(const Hypergraph& rep, const ColoringCertificate& coloring);

} // namespace kgturan
