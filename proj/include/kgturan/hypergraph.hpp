#pragma once

#include "kgturan/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kgturan {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// A finite (multi)hypergraph on vertices 0..n-1.
///
/// Hyperedges are identified by position: hyperedge i has id i. Two ids may
/// carry the same member set, which is how edge multiplicity is represented.
/// Isolated vertices are allowed and preserved. Member lists are stored sorted.
///
/// Set-valued searches need the bitset view (edge_mask), which is available
/// only when n <= VertexSet::kCapacity.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Throws InvalidArgument on an empty hyperedge, a member outside [0, n),
    /// a repeated member inside one hyperedge, or a label list of the wrong length.
    Hypergraph(std::size_t n, std::vector<std::vector<VertexId>> edges,
               std::vector<std::string> labels = {});

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<VertexId>& edge(EdgeId id) const { return edges_.at(id); }
    const std::vector<std::vector<VertexId>>& edges() const { return edges_; }

    const std::vector<std::string>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }
    /// Label of v, or its decimal index when unlabeled.
    std::string label(VertexId v) const;

    /// Bitset view of a hyperedge. Throws CapExceeded when n > 128.
    const VertexSet& edge_mask(EdgeId id) const;
    bool fits_bitset() const { return n_ <= VertexSet::kCapacity; }

    std::vector<std::size_t> degrees() const;
    std::vector<VertexId> isolated_vertices() const;
    std::size_t max_edge_size() const;
    std::size_t min_edge_size() const;
    /// True when every hyperedge has exactly k members (vacuously true with no edges).
    bool is_uniform(std::size_t k) const;
    bool is_graph() const { return is_uniform(2); }
    /// True when two distinct ids share a member set.
    bool has_parallel_edges() const;
    /// Incident hyperedge ids per vertex, ascending.
    std::vector<std::vector<EdgeId>> incidence() const;

    /// Same hyperedges on the non-isolated vertices, renumbered in increasing order.
    Hypergraph without_isolated_vertices() const;
    /// Same hyperedges with `extra` isolated vertices appended.
    Hypergraph with_isolated_vertices(std::size_t extra) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<VertexId>> edges_;
    std::vector<std::string> labels_;
    std::vector<VertexSet> masks_;
};

/// r pairwise-disjoint vertex subsets of a host, as used by induced_restriction.
struct RestrictionSpec {
    std::vector<std::vector<VertexId>> parts;
};

/// The induced hypergraph on the union of the parts: keeps exactly the
/// hyperedges contained in a single part, with multiplicities, in id order.
/// Vertices are renumbered ascending by host id; labels carry the host
/// labels (or host ids). Throws InvalidArgument on overlapping parts.
Hypergraph induced_restriction(const Hypergraph& h, const RestrictionSpec& spec);

} // namespace kgturan
