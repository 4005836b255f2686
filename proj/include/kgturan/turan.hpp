#pragma once

#include "kgturan/hypergraph.hpp"
#include "kgturan/patterns.hpp"
#include "kgturan/sign_vector.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kgturan {

enum class BoundMode { exact, lower_bound, upper_bound };

std::string to_string(BoundMode mode);
BoundMode parse_bound_mode(const std::string& text);

/// Partial red/blue colouring of host hyperedges along an ordering of the edge ids.
/// colour[e] is -1 (uncoloured), 0 (red) or 1 (blue).
struct AlternatingColoring {
    LinearOrdering ordering;
    std::vector<int> colour;

    std::size_t length() const;
    std::vector<EdgeId> red() const;
    std::vector<EdgeId> blue() const;
};

/// Consecutive coloured ids along the ordering have different colours.
bool is_alternating(const AlternatingColoring& c);

/// Decides containment of a family member by a set of host edge ids, using the
/// host's occurrence list. Edge sets are 64-bit masks, so hosts are capped at 64 edges.
class FreenessOracle {
public:
    FreenessOracle(const Hypergraph& host, const PatternFamily& family, const PatternOptions& options = {});

    std::size_t num_edges() const { return num_edges_; }
    std::size_t num_occurrences() const { return occurrences_.size(); }
    const std::vector<std::uint64_t>& occurrences() const { return occurrences_; }

    /// True when no occurrence lies inside `edges`.
    bool is_free(std::uint64_t edges) const;
    /// Assuming `edges` is free: true when edges + {e} is still free.
    bool stays_free(std::uint64_t edges, EdgeId e) const;

private:
    std::size_t num_edges_ = 0;
    std::vector<std::uint64_t> occurrences_;
    std::vector<std::vector<std::uint64_t>> through_;
};

/// Host hyperedge ids -> mask. Throws CapExceeded past 64 edges.
std::uint64_t edge_set_mask(std::size_t num_edges, const std::vector<EdgeId>& ids);

struct TuranReport {
    std::size_t value = 0;
    BoundMode mode = BoundMode::exact;
    std::vector<EdgeId> witness;                 // extremal edge set, for ex
    std::optional<AlternatingColoring> coloring; // for ex_alt / ex_salt
    std::uint64_t nodes = 0;
};

struct TuranOptions {
    std::size_t max_exact_edges = 24;
    std::size_t max_ordering_edges = 8;
    PatternOptions patterns;
};

/// ex(H, F): most hyperedges of an F-free spanning subhypergraph. Exact up to
/// max_exact_edges host edges; beyond that a greedy lower bound is reported
/// when allow_heuristic is set, otherwise CapExceeded.
TuranReport turan_number(const Hypergraph& host, const PatternFamily& family, const TuranOptions& options = {},
                         bool allow_heuristic = false);

/// Longest alternating colouring along sigma (an ordering of edge ids) whose red
/// and blue sides are both F-free, or with strong set at least one of them.
TuranReport ex_alt_sigma(const Hypergraph& host, const PatternFamily& family, const LinearOrdering& sigma,
                         bool strong, const TuranOptions& options = {});

struct OrderingSearch {
    BoundMode mode = BoundMode::exact; // exact or upper_bound (heuristic)
    std::uint64_t seed = 1;
    std::size_t restarts = 64;
    std::size_t workers = 1;
};

/// min over orderings of ex_alt_sigma. Exact mode scans every ordering (up to
/// reversal) and is capped at max_ordering_edges host edges. Heuristic mode
/// tries interval orderings, the identity and seeded random orderings and tags
/// the result as an upper bound.
TuranReport ex_alt_min(const Hypergraph& host, const PatternFamily& family, bool strong,
                       const OrderingSearch& search = {}, const TuranOptions& options = {});

/// Edge ordering of a 2-uniform multigraph listing each parallel class
/// contiguously (classes by first appearance). With singles_last, classes of a
/// single edge are moved to the end.
LinearOrdering interval_ordering(const Hypergraph& host, bool singles_last = false);

/// Independent re-checks used by the verifier. They rebuild the subhypergraph
/// of each side and run the occurrence search on it alone.
bool is_family_free(const Hypergraph& host, const std::vector<EdgeId>& edges, const PatternFamily& family);
bool validate_turan_witness(const Hypergraph& host, const PatternFamily& family, const TuranReport& report);
bool validate_alternating_witness(const Hypergraph& host, const PatternFamily& family, const TuranReport& report,
                                  bool strong);

} // namespace kgturan
