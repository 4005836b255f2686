#pragma once

#include "kgturan/hypergraph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kgturan {

/// Forbidden / selected subhypergraph shapes. Every pattern has at least one
/// hyperedge and no isolated vertex.
class PatternFamily {
public:
    PatternFamily() = default;
    /// Throws InvalidArgument if a pattern has no hyperedge or an isolated vertex.
    explicit PatternFamily(std::vector<Hypergraph> patterns);
    static PatternFamily single(Hypergraph pattern) { return PatternFamily({std::move(pattern)}); }

    std::size_t size() const { return patterns_.size(); }
    const Hypergraph& operator[](std::size_t i) const { return patterns_.at(i); }
    const std::vector<Hypergraph>& patterns() const { return patterns_; }

private:
    std::vector<Hypergraph> patterns_;
};

/// A set of host hyperedge ids whose union subhypergraph is isomorphic to a pattern.
struct PatternOccurrence {
    std::size_t pattern_index = 0;
    std::vector<EdgeId> edge_ids; // ascending
    friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

struct PatternOptions {
    std::size_t max_occurrences = 2'000'000;
    std::size_t max_host_edges = 4096;
    /// Top-level branches of the search are split across this many threads.
    std::size_t workers = 1;
};

/// All occurrences of family members in the host: one entry per distinct
/// edge-id set per isomorphism class of patterns (the smallest pattern index of
/// the class is reported). Sorted lexicographically by edge-id set, then pattern.
/// Throws CapExceeded when the host or the occurrence count exceeds the options.
std::vector<PatternOccurrence> enumerate_occurrences(const Hypergraph& host, const PatternFamily& family,
                                                     const PatternOptions& options = {});

/// The hypergraph on E(host) whose hyperedges are the distinct occurrence edge-id
/// sets. Host edges in no occurrence stay as isolated vertices.
Hypergraph pattern_hypergraph(const Hypergraph& host, const PatternFamily& family,
                              const PatternOptions& options = {});

/// Same as pattern_hypergraph, from an already enumerated occurrence list.
Hypergraph pattern_hypergraph_from(std::size_t host_edges, const std::vector<PatternOccurrence>& occurrences);

/// A vertex bijection phi (phi[v] = image of v) mapping the hyperedge multiset of
/// `a` onto that of `b`, if one exists. With keep_isolated = false both inputs
/// are compared after dropping isolated vertices, and the bijection refers to
/// the compacted numbering.
std::optional<std::vector<VertexId>> find_isomorphism(const Hypergraph& a, const Hypergraph& b,
                                                      bool keep_isolated = true);

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, bool keep_isolated = true);

/// Checks that phi maps the hyperedge multiset of a onto that of b.
bool is_isomorphism(const Hypergraph& a, const Hypergraph& b, const std::vector<VertexId>& phi);

/// The subhypergraph of host formed by the given edge ids, isolated vertices removed.
Hypergraph edge_subhypergraph(const Hypergraph& host, const std::vector<EdgeId>& edge_ids);

} // namespace kgturan
