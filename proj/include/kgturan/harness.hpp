#pragma once

#include "kgturan/exact.hpp"
#include "kgturan/hypergraph.hpp"
#include "kgturan/kneser.hpp"
#include "kgturan/patterns.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kgturan {

struct P2Count {
    std::uint64_t count = 0;        // sum over vertices of C(deg, 2)
    bool jensen_bound_holds = true; // count >= (2e/n)(e - n/2)
};

/// Number of P2 subgraphs of a simple graph.
P2Count count_p2(const Hypergraph& g);

enum class ComponentKind { k2, k3 };

struct FactorComponent {
    ComponentKind kind = ComponentKind::k3;
    std::vector<VertexId> vertices; // ascending
};

/// Spanning vertex-disjoint triangles followed by at most two single edges.
struct FactorWitness {
    std::vector<FactorComponent> components;
};

/// Exhaustive search for a factor of that shape. Throws CapExceeded above max_vertices.
std::optional<FactorWitness> find_triangle_factor(const Hypergraph& g, std::size_t max_vertices = 15);

bool validate_factor(const Hypergraph& g, const FactorWitness& factor);

/// |E| - floor(2n/3).
std::size_t path_theorem_value(const Hypergraph& g);

/// Colouring of KG(g, {P2}) whose vertices are the P2 occurrences of g in
/// enumeration order: a P2 inside the i-th triangle gets l + i, any other gets
/// the least index of an edge outside the factor it uses (l = number of such edges).
/// Throws InvalidArgument on an invalid factor.
ColoringCertificate path_graph_coloring(const Hypergraph& g, const FactorWitness& factor);

enum class CaseStatus { pass, fail, info, cap, erratum };
std::string to_string(CaseStatus status);

struct GoldenInstance {
    Hypergraph representation;
    int r = 2;
};

struct GoldenCase {
    std::string id;
    std::string group;
    std::string description;
    std::string formula;
    std::optional<std::size_t> expected;
    bool informational = false;
    std::function<GoldenInstance()> build;
    /// Known disagreement with the formula, shown instead of a failure when the value differs.
    std::string erratum;
};

struct GoldenManifest {
    std::string version;
    std::vector<GoldenCase> cases;
};

/// The frozen case list. Groups: kneser, schrijver, kneser-hyper, triangles, worked,
/// path, multigraph, probe.
const GoldenManifest& golden_manifest();

struct CaseResult {
    std::string id;
    std::string group;
    std::string description;
    std::string formula;
    std::optional<std::size_t> expected;
    std::optional<ChromaticValue> computed;
    CaseStatus status = CaseStatus::fail;
    std::string note;
    std::size_t kg_vertices = 0;
    std::size_t kg_edges = 0;
    ColoringCertificate coloring;
    std::vector<std::size_t> refuted_colors;
    double seconds = 0;
};

struct GoldenReport {
    std::string version;
    std::vector<CaseResult> cases;
    bool ok() const;
};

/// Runs the selected groups (all when empty). Cap violations are reported per
/// case; informational cases and recorded errata never fail the suite.
GoldenReport run_golden_suite(const std::set<std::string>& groups = {}, const SolverLimits& limits = {});

std::string golden_report_json(const GoldenReport& report, int indent = 2);
std::string golden_report_table(const GoldenReport& report);

} // namespace kgturan
