#include "kgturan/harness.hpp"

#include "kgturan/errors.hpp"
#include "kgturan/families.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <iomanip>
#include <sstream>

namespace kgturan {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

void require_simple(const Hypergraph& g)
{
    if (!g.is_graph() || g.has_parallel_edges())
        throw InvalidArgument("expected a simple graph");
}

class FactorSearch {
public:
    FactorSearch(const Hypergraph& g, std::size_t singles) : n_(g.num_vertices()), adj_(n_, 0), singles_(singles)
    {
        for (const auto& e : g.edges()) {
            adj_[e[0]] |= bit(e[1]);
            adj_[e[1]] |= bit(e[0]);
        }
    }

    bool run() { return expand(n_ == 64 ? ~Mask{0} : bit(n_) - 1); }
    const std::vector<FactorComponent>& components() const { return stack_; }

private:
    bool expand(Mask uncovered)
    {
        if (!uncovered)
            return true;
        auto v = static_cast<VertexId>(std::countr_zero(uncovered));
        Mask rest = uncovered & ~bit(v);
        Mask nbrs = adj_[v] & rest;
        for (Mask a_set = nbrs; a_set; a_set &= a_set - 1) {
            auto a = static_cast<VertexId>(std::countr_zero(a_set));
            Mask b_set = nbrs & adj_[a] & ~(bit(a + 1) - 1);
            for (; b_set; b_set &= b_set - 1) {
                auto b = static_cast<VertexId>(std::countr_zero(b_set));
                stack_.push_back({ComponentKind::k3, {v, a, b}});
                if (expand(rest & ~bit(a) & ~bit(b)))
                    return true;
                stack_.pop_back();
            }
        }
        if (used_singles_ < singles_) {
            for (Mask a_set = nbrs; a_set; a_set &= a_set - 1) {
                auto a = static_cast<VertexId>(std::countr_zero(a_set));
                ++used_singles_;
                stack_.push_back({ComponentKind::k2, {v, a}});
                if (expand(rest & ~bit(a)))
                    return true;
                stack_.pop_back();
                --used_singles_;
            }
        }
        return false;
    }

    std::size_t n_;
    std::vector<Mask> adj_;
    std::size_t singles_;
    std::size_t used_singles_ = 0;
    std::vector<FactorComponent> stack_;
};

GoldenInstance from_pattern(const Hypergraph& host, const PatternFamily& family, int r = 2)
{
    return {pattern_hypergraph(host, family), r};
}

GoldenInstance named(NamedKneser kind, NamedKneserParams p, int r = 2)
{
    auto rep = named_representation(kind, p);
    return from_pattern(rep.host, rep.family, r);
}

PatternFamily single(Hypergraph h) { return PatternFamily::single(std::move(h)); }

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

GoldenManifest make_manifest()
{
    GoldenManifest m;
    m.version = "1";
    auto add = [&](std::string id, std::string group, std::string description, std::string formula,
                   std::optional<std::size_t> expected, bool informational, std::function<GoldenInstance()> build,
                   std::string erratum = {}) {
        m.cases.push_back({std::move(id), std::move(group), std::move(description), std::move(formula), expected,
                           informational, std::move(build), std::move(erratum)});
    };

    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 3}}) {
        add("kneser-" + std::to_string(n) + "-" + std::to_string(k), "kneser",
            "KG(" + std::to_string(n) + "K2, " + std::to_string(k) + "K2)", "n - 2k + 2",
            static_cast<std::size_t>(n - 2 * k + 2), false,
            [n, k] { return named(NamedKneser::kneser, {.n = n, .k = k}); });
    }
    for (auto [n, k] : {std::pair{5, 2}, {6, 2}, {7, 2}, {7, 3}, {8, 3}}) {
        add("schrijver-" + std::to_string(n) + "-" + std::to_string(k), "schrijver",
            "KG(C" + std::to_string(n) + ", " + std::to_string(k) + "K2)", "n - 2k + 2",
            static_cast<std::size_t>(n - 2 * k + 2), false,
            [n, k] { return named(NamedKneser::schrijver, {.n = n, .k = k}); });
    }
    for (int n : {6, 7, 8}) {
        add("kneser-hyper-" + std::to_string(n) + "-2-r3", "kneser-hyper",
            "KG^3(" + std::to_string(n) + "K2, 2K2)", "ceil((n - r(k-1)) / (r-1))",
            ceil_div(static_cast<std::size_t>(n - 3), 2), false,
            [n] { return named(NamedKneser::kneser, {.n = n, .k = 2}, 3); });
    }
    for (int n : {5, 6}) {
        add("triangles-k" + std::to_string(n), "triangles", "KG(K" + std::to_string(n) + ", C3)", "floor((n-1)^2 / 4)",
            static_cast<std::size_t>((n - 1) * (n - 1) / 4), false,
            [n] { return from_pattern(complete_graph(n), single(cycle_graph(3))); },
            n == 5 ? "triangles of K5 are complements of 2-sets, edge-disjoint iff those 2-sets are disjoint, "
                     "so KG(K5, C3) is the Petersen graph with chi 3"
                   : "");
    }
    add("worked-k4-p2", "worked", "KG(K4, P2)", "|E| - ex = 6 - 2", 4, false,
        [] { return from_pattern(complete_graph(4), single(path_graph(2))); });

    for (int n : {4, 5, 6}) {
        std::size_t value = choose2(static_cast<std::size_t>(n)) - static_cast<std::size_t>(2 * n / 3);
        add("path-k" + std::to_string(n), "path", "KG(K" + std::to_string(n) + ", P2)", "|E| - floor(2n/3)", value,
            false, [n] { return from_pattern(complete_graph(n), single(path_graph(2))); });
    }
    add("path-c5", "path", "KG(C5, P2), no triangle factor", "observed value 3 (formula would give 2)", 3, false,
        [] { return from_pattern(cycle_graph(5), single(path_graph(2))); });

    struct Multi {
        const char* name;
        std::function<Hypergraph()> base;
        std::size_t ex_k3;
        std::size_t ex_p2;
    };
    std::vector<Multi> multis = {
        {"triangle", [] { return complete_graph(3); }, 4, 2},
        {"c4", [] { return cycle_graph(4); }, 8, 4},
        {"k4", [] { return complete_graph(4); }, 8, 4},
    };
    for (const auto& mg : multis) {
        auto base = mg.base;
        std::size_t edges = 2 * base().num_edges();
        add(std::string("multigraph-") + mg.name + "-k3", "multigraph", std::string("KG(2x") + mg.name + ", K3)",
            "|E| - ex = " + std::to_string(edges) + " - " + std::to_string(mg.ex_k3), edges - mg.ex_k3, false,
            [base] { return from_pattern(build_multigraph(base(), 2), single(cycle_graph(3))); });
        add(std::string("multigraph-") + mg.name + "-p2", "multigraph", std::string("KG(2x") + mg.name + ", P2)",
            "|E| - ex = " + std::to_string(edges) + " - " + std::to_string(mg.ex_p2), edges - mg.ex_p2, false,
            [base] { return from_pattern(build_multigraph(base(), 2), single(path_graph(2))); });
    }

    // Probes: values are recorded, never asserted.
    for (int n : {5, 6, 7}) {
        std::size_t s = static_cast<std::size_t>(n) / 3, r = static_cast<std::size_t>(n) % 3;
        add("probe-clique-k" + std::to_string(n) + "-k4", "probe", "KG(K" + std::to_string(n) + ", K4)",
            "(k-1)C(s,2) + rs for large n", 3 * (s * (s - 1) / 2) + r * s, true,
            [n] { return from_pattern(complete_graph(n), single(complete_graph(4))); });
    }
    add("probe-odd-cycle-k5-c5", "probe", "KG(K5, C5)", "floor((n-1)^2 / 4) for large n", 4, true,
        [] { return from_pattern(complete_graph(5), single(cycle_graph(5))); });
    add("probe-odd-cycle-k6-c5", "probe", "KG(K6, C5)", "floor((n-1)^2 / 4) for large n", 6, true,
        [] { return from_pattern(complete_graph(6), single(cycle_graph(5))); });
    add("probe-four-cycle-k4", "probe", "KG(K4, C4)", "|E| - ex(K4, C4) = 6 - 4", 2, true,
        [] { return from_pattern(complete_graph(4), single(cycle_graph(4))); });
    add("probe-four-cycle-k5", "probe", "KG(K5, C4)", "|E| - ex(K5, C4) = 10 - 6", 4, true,
        [] { return from_pattern(complete_graph(5), single(cycle_graph(4))); });
    add("probe-prime-power-q2", "probe", "KG(K7, C4)", "C(7,2) - q(q+1)^2/2 = 21 - 9", 12, true,
        [] { return from_pattern(complete_graph(7), single(cycle_graph(4))); });
    add("probe-cartesian-k44-c4", "probe", "KG(K4,4, K2,2)", "upper bound mn - ex = 16 - 9", 7, true,
        [] { return from_pattern(complete_bipartite_graph(4, 4), single(complete_bipartite_graph(2, 2))); });
    return m;
}

} // namespace

P2Count count_p2(const Hypergraph& g)
{
    require_simple(g);
    P2Count out;
    for (auto d : g.degrees())
        out.count += static_cast<std::uint64_t>(d) * (d - (d > 0 ? 1 : 0)) / 2;
    auto n = static_cast<long long>(g.num_vertices());
    auto e = static_cast<long long>(g.num_edges());
    if (n > 0)
        out.jensen_bound_holds = n * static_cast<long long>(out.count) >= e * (2 * e - n);
    return out;
}

std::optional<FactorWitness> find_triangle_factor(const Hypergraph& g, std::size_t max_vertices)
{
    require_simple(g);
    if (g.num_vertices() > std::min<std::size_t>(max_vertices, 64))
        throw_cap("graph vertices for the factor search", g.num_vertices(), max_vertices);
    std::size_t n = g.num_vertices();
    // 3a + 2c = n with c <= 2 fixes the number c of single edges.
    static constexpr std::size_t singles_by_residue[3] = {0, 2, 1};
    std::size_t singles = singles_by_residue[n % 3];
    if (2 * singles > n)
        return std::nullopt;
    FactorSearch search(g, singles);
    if (!search.run())
        return std::nullopt;
    FactorWitness out;
    out.components = search.components();
    std::stable_partition(out.components.begin(), out.components.end(),
                          [](const FactorComponent& c) { return c.kind == ComponentKind::k3; });
    for (auto& c : out.components)
        std::sort(c.vertices.begin(), c.vertices.end());
    return out;
}

bool validate_factor(const Hypergraph& g, const FactorWitness& factor)
{
    require_simple(g);
    std::set<std::vector<VertexId>> edges(g.edges().begin(), g.edges().end());
    std::vector<int> seen(g.num_vertices(), 0);
    std::size_t singles = 0;
    bool tail = false;
    for (const auto& c : factor.components) {
        std::size_t size = c.kind == ComponentKind::k3 ? 3 : 2;
        if (c.vertices.size() != size)
            return false;
        if (c.kind == ComponentKind::k2) {
            ++singles;
            tail = true;
        } else if (tail) {
            return false; // triangles come first
        }
        for (std::size_t a = 0; a < size; ++a) {
            if (c.vertices[a] >= g.num_vertices() || seen[c.vertices[a]]++)
                return false;
            for (std::size_t b = a + 1; b < size; ++b) {
                auto u = std::min(c.vertices[a], c.vertices[b]), v = std::max(c.vertices[a], c.vertices[b]);
                if (!edges.count({u, v}))
                    return false;
            }
        }
    }
    return singles <= 2 && std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

std::size_t path_theorem_value(const Hypergraph& g) { return g.num_edges() - 2 * g.num_vertices() / 3; }

ColoringCertificate path_graph_coloring(const Hypergraph& g, const FactorWitness& factor)
{
    if (!validate_factor(g, factor))
        throw InvalidArgument("invalid factor for the path-graph colouring");
    std::map<std::vector<VertexId>, EdgeId> edge_id;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        edge_id[g.edge(e)] = e;
    std::vector<int> triangle_of(g.num_edges(), -1);
    std::vector<char> in_factor(g.num_edges(), 0);
    int triangles = 0;
    for (const auto& c : factor.components) {
        const auto& v = c.vertices;
        for (std::size_t a = 0; a < v.size(); ++a)
            for (std::size_t b = a + 1; b < v.size(); ++b) {
                EdgeId e = edge_id.at({v[a], v[b]});
                in_factor[e] = 1;
                if (c.kind == ComponentKind::k3)
                    triangle_of[e] = triangles;
            }
        if (c.kind == ComponentKind::k3)
            ++triangles;
    }
    std::vector<int> t_index(g.num_edges(), -1);
    int l = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (!in_factor[e])
            t_index[e] = l++;

    ColoringCertificate out;
    out.kind = ColoringKind::graph;
    out.num_colors = static_cast<std::size_t>(l + triangles);
    for (const auto& occ : enumerate_occurrences(g, PatternFamily::single(path_graph(2)))) {
        EdgeId x = occ.edge_ids[0], y = occ.edge_ids[1];
        if (triangle_of[x] != -1 && triangle_of[x] == triangle_of[y]) {
            out.assignment.push_back(l + triangle_of[x]);
        } else {
            int least = -1;
            for (auto e : occ.edge_ids)
                if (t_index[e] != -1 && (least == -1 || t_index[e] < least))
                    least = t_index[e];
            if (least == -1)
                throw std::logic_error("P2 outside the factor without an edge off the factor");
            out.assignment.push_back(least);
        }
    }
    return out;
}

std::string to_string(CaseStatus status)
{
    switch (status) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "FAIL";
    case CaseStatus::info: return "info";
    case CaseStatus::cap: return "cap";
    case CaseStatus::erratum: return "erratum";
    }
    return "?";
}

const GoldenManifest& golden_manifest()
{
    static const GoldenManifest manifest = make_manifest();
    return manifest;
}

bool GoldenReport::ok() const
{
    return std::none_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == CaseStatus::fail; });
}

GoldenReport run_golden_suite(const std::set<std::string>& groups, const SolverLimits& limits)
{
    const auto& manifest = golden_manifest();
    for (const auto& g : groups)
        if (std::none_of(manifest.cases.begin(), manifest.cases.end(),
                         [&](const GoldenCase& c) { return c.group == g; }))
            throw InvalidArgument("unknown golden group '" + g + "'");
    GoldenReport report;
    report.version = manifest.version;
    for (const auto& c : manifest.cases) {
        if (!groups.empty() && !groups.count(c.group))
            continue;
        CaseResult r;
        r.id = c.id;
        r.group = c.group;
        r.description = c.description;
        r.formula = c.formula;
        r.expected = c.expected;
        auto start = std::chrono::steady_clock::now();
        try {
            auto inst = c.build();
            auto kg = kneser_power(inst.representation, inst.r);
            r.kg_vertices = kg.result.num_vertices();
            r.kg_edges = kg.result.num_edges();
            auto chi = inst.r == 2 ? chromatic_number_graph(kg.result, limits)
                                   : chromatic_number_hypergraph(kg.result, limits);
            if (!chi.value.is_unbounded() && !validate_coloring(kg.result, chi.coloring))
                throw std::logic_error("solver returned an invalid colouring for " + c.id);
            r.computed = chi.value;
            r.coloring = chi.coloring;
            r.refuted_colors = chi.refuted_colors;
            if (c.informational)
                r.status = CaseStatus::info;
            else if (c.expected && chi.value == ChromaticValue(*c.expected))
                r.status = CaseStatus::pass;
            else if (!c.erratum.empty()) {
                r.status = CaseStatus::erratum;
                r.note = c.erratum;
            } else
                r.status = CaseStatus::fail;
        } catch (const CapExceeded& e) {
            r.status = CaseStatus::cap;
            r.note = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.cases.push_back(std::move(r));
    }
    return report;
}

std::string golden_report_json(const GoldenReport& report, int indent)
{
    nlohmann::ordered_json doc;
    doc["manifest_version"] = report.version;
    doc["ok"] = report.ok();
    doc["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : report.cases) {
        nlohmann::ordered_json j;
        j["id"] = c.id;
        j["group"] = c.group;
        j["instance"] = c.description;
        j["formula"] = c.formula;
        j["expected"] = c.expected ? nlohmann::ordered_json(*c.expected) : nlohmann::ordered_json(nullptr);
        if (c.computed)
            j["chi"] = c.computed->is_unbounded() ? nlohmann::ordered_json("unbounded")
                                                  : nlohmann::ordered_json(c.computed->value());
        else
            j["chi"] = nullptr;
        j["status"] = to_string(c.status);
        if (!c.note.empty())
            j["note"] = c.note;
        j["kg_vertices"] = c.kg_vertices;
        j["kg_edges"] = c.kg_edges;
        j["seconds"] = std::round(c.seconds * 1000.0) / 1000.0;
        j["certificate"] = {{"assignment", c.coloring.assignment},
                            {"num_colors", c.coloring.num_colors},
                            {"refuted_colors", c.refuted_colors}};
        doc["cases"].push_back(std::move(j));
    }
    return doc.dump(indent);
}

std::string golden_report_table(const GoldenReport& report)
{
    std::ostringstream out;
    out << std::left << std::setw(28) << "case" << std::setw(30) << "instance" << std::right << std::setw(6)
        << "|V|" << std::setw(9) << "expected" << std::setw(8) << "chi" << std::setw(8) << "status"
        << std::setw(10) << "seconds" << '\n';
    for (const auto& c : report.cases) {
        out << std::left << std::setw(28) << c.id << std::setw(30) << c.description << std::right << std::setw(6)
            << c.kg_vertices << std::setw(9) << (c.expected ? std::to_string(*c.expected) : "-") << std::setw(8)
            << (c.computed ? c.computed->to_string() : "-") << std::setw(8) << to_string(c.status) << std::setw(10)
            << std::fixed << std::setprecision(3) << c.seconds << '\n';
        if (c.status == CaseStatus::erratum)
            out << "    note: " << c.note << '\n';
    }
    auto errata = std::count_if(report.cases.begin(), report.cases.end(),
                                [](const CaseResult& c) { return c.status == CaseStatus::erratum; });
    out << "manifest " << report.version << ": " << (report.ok() ? "all asserted cases match" : "MISMATCH");
    if (errata)
        out << ", " << errata << " recorded erratum";
    out << '\n';
    return out.str();
}

} // namespace kgturan
