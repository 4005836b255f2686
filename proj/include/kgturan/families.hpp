#pragma once

#include "kgturan/hypergraph.hpp"

#include <span>
#include <string>
#include <vector>

namespace kgturan {

// Canonical numbering, frozen so certificates are reproducible:
//   cycle C_n        vertices 0..n-1 in cyclic order, edge i = {i, i+1 mod n}
//   path P_n         n+1 vertices 0..n, edge i = {i, i+1}
//   complete K_n     edges in lexicographic order
//   bipartite K_m,n  parts 0..m-1 and m..m+n-1, edges lexicographic
//   matching rK_2    edge i = {2i, 2i+1}
//   uniform K_n^s    all s-subsets of [n], lexicographic
//   star K_1,k       centre 0, leaves 1..k
enum class FamilyKind { cycle, path, complete, complete_bipartite, matching, complete_uniform, star };

FamilyKind parse_family_kind(const std::string& name);
std::string to_string(FamilyKind kind);

/// Builds a named family. Parameters: cycle(n>=3), path(len>=1), complete(n>=1),
/// complete_bipartite(m,n), matching(r), complete_uniform(n,s) with s<=n, star(k).
Hypergraph build_named_family(FamilyKind kind, std::span<const int> params);

Hypergraph cycle_graph(int n);
Hypergraph path_graph(int length);
Hypergraph complete_graph(int n);
Hypergraph complete_bipartite_graph(int m, int n);
Hypergraph matching_graph(int r);
Hypergraph complete_uniform_hypergraph(int n, int s);
Hypergraph star_graph(int k);

/// Replicates base edge i multiplicity[i] times, copies receiving consecutive ids.
/// Base must be a simple graph; every count must be >= 1.
Hypergraph build_multigraph(const Hypergraph& base, std::span<const std::size_t> multiplicity);
/// Every edge of `base` replicated `count` times.
Hypergraph build_multigraph(const Hypergraph& base, std::size_t count);

/// Partition of the edge ids into classes of identical member sets, ordered by
/// first occurrence; ids ascending inside a class.
std::vector<std::vector<EdgeId>> parallel_classes(const Hypergraph& h);

/// One representative per parallel class, in class order.
Hypergraph flatten_multiplicities(const Hypergraph& h);

} // namespace kgturan
