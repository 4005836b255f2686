#include "kgturan/families.hpp"

#include "kgturan/errors.hpp"

#include <map>

namespace kgturan {

namespace {

void require_positive(int value, const char* name)
{
    if (value <= 0)
        throw InvalidArgument(std::string("family parameter ") + name + " must be positive, got " +
                              std::to_string(value));
}

void subsets(int n, int s, int start, std::vector<VertexId>& cur, std::vector<std::vector<VertexId>>& out)
{
    if (static_cast<int>(cur.size()) == s) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v <= n - (s - static_cast<int>(cur.size())); ++v) {
        cur.push_back(static_cast<VertexId>(v));
        subsets(n, s, v + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

FamilyKind parse_family_kind(const std::string& name)
{
    static const std::map<std::string, FamilyKind> kinds = {
        {"cycle", FamilyKind::cycle},
        {"path", FamilyKind::path},
        {"complete", FamilyKind::complete},
        {"complete_bipartite", FamilyKind::complete_bipartite},
        {"bipartite", FamilyKind::complete_bipartite},
        {"matching", FamilyKind::matching},
        {"complete_uniform", FamilyKind::complete_uniform},
        {"star", FamilyKind::star},
    };
    auto it = kinds.find(name);
    if (it == kinds.end())
        throw InvalidArgument("unknown family '" + name + "'");
    return it->second;
}

std::string to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::path: return "path";
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_bipartite: return "complete_bipartite";
    case FamilyKind::matching: return "matching";
    case FamilyKind::complete_uniform: return "complete_uniform";
    case FamilyKind::star: return "star";
    }
    return "?";
}

Hypergraph build_named_family(FamilyKind kind, std::span<const int> params)
{
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw InvalidArgument("family " + to_string(kind) + " takes " + std::to_string(count) +
                                  " parameter(s), got " + std::to_string(params.size()));
    };
    switch (kind) {
    case FamilyKind::cycle: need(1); return cycle_graph(params[0]);
    case FamilyKind::path: need(1); return path_graph(params[0]);
    case FamilyKind::complete: need(1); return complete_graph(params[0]);
    case FamilyKind::complete_bipartite: need(2); return complete_bipartite_graph(params[0], params[1]);
    case FamilyKind::matching: need(1); return matching_graph(params[0]);
    case FamilyKind::complete_uniform: need(2); return complete_uniform_hypergraph(params[0], params[1]);
    case FamilyKind::star: need(1); return star_graph(params[0]);
    }
    throw InvalidArgument("unknown family kind");
}

Hypergraph cycle_graph(int n)
{
    require_positive(n, "n");
    if (n < 3)
        throw InvalidArgument("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<std::vector<VertexId>> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
    return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

Hypergraph path_graph(int length)
{
    require_positive(length, "length");
    std::vector<std::vector<VertexId>> edges;
    for (int i = 0; i < length; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
    return Hypergraph(static_cast<std::size_t>(length) + 1, std::move(edges));
}

Hypergraph complete_graph(int n)
{
    require_positive(n, "n");
    if (n == 1)
        return Hypergraph(1, {});
    return complete_uniform_hypergraph(n, 2);
}

Hypergraph complete_bipartite_graph(int m, int n)
{
    require_positive(m, "m");
    require_positive(n, "n");
    std::vector<std::vector<VertexId>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(m + j)});
    return Hypergraph(static_cast<std::size_t>(m + n), std::move(edges));
}

Hypergraph matching_graph(int r)
{
    require_positive(r, "r");
    std::vector<std::vector<VertexId>> edges;
    for (int i = 0; i < r; ++i)
        edges.push_back({static_cast<VertexId>(2 * i), static_cast<VertexId>(2 * i + 1)});
    return Hypergraph(2 * static_cast<std::size_t>(r), std::move(edges));
}

Hypergraph complete_uniform_hypergraph(int n, int s)
{
    require_positive(n, "n");
    require_positive(s, "s");
    if (s > n)
        throw InvalidArgument("complete uniform hypergraph needs s <= n, got s=" + std::to_string(s) +
                              " n=" + std::to_string(n));
    std::vector<std::vector<VertexId>> edges;
    std::vector<VertexId> cur;
    subsets(n, s, 0, cur, edges);
    return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

Hypergraph star_graph(int k)
{
    require_positive(k, "k");
    std::vector<std::vector<VertexId>> edges;
    for (int i = 1; i <= k; ++i)
        edges.push_back({0, static_cast<VertexId>(i)});
    return Hypergraph(static_cast<std::size_t>(k) + 1, std::move(edges));
}

Hypergraph build_multigraph(const Hypergraph& base, std::span<const std::size_t> multiplicity)
{
    if (!base.is_graph())
        throw InvalidArgument("multigraph base must be 2-uniform");
    if (base.has_parallel_edges())
        throw InvalidArgument("multigraph base must be a simple graph");
    if (multiplicity.size() != base.num_edges())
        throw InvalidArgument("multiplicity map has " + std::to_string(multiplicity.size()) +
                              " entries for " + std::to_string(base.num_edges()) + " edges");
    std::vector<std::vector<VertexId>> edges;
    for (EdgeId i = 0; i < base.num_edges(); ++i) {
        if (multiplicity[i] == 0)
            throw InvalidArgument("edge multiplicity must be >= 1 (edge " + std::to_string(i) + ")");
        for (std::size_t c = 0; c < multiplicity[i]; ++c)
            edges.push_back(base.edge(i));
    }
    return Hypergraph(base.num_vertices(), std::move(edges), base.labels());
}

Hypergraph build_multigraph(const Hypergraph& base, std::size_t count)
{
    std::vector<std::size_t> mult(base.num_edges(), count);
    return build_multigraph(base, mult);
}

std::vector<std::vector<EdgeId>> parallel_classes(const Hypergraph& h)
{
    std::map<std::vector<VertexId>, std::size_t> index;
    std::vector<std::vector<EdgeId>> classes;
    for (EdgeId i = 0; i < h.num_edges(); ++i) {
        auto [it, inserted] = index.try_emplace(h.edge(i), classes.size());
        if (inserted)
            classes.emplace_back();
        classes[it->second].push_back(i);
    }
    return classes;
}

Hypergraph flatten_multiplicities(const Hypergraph& h)
{
    std::vector<std::vector<VertexId>> edges;
    for (const auto& cls : parallel_classes(h))
        edges.push_back(h.edge(cls.front()));
    return Hypergraph(h.num_vertices(), std::move(edges), h.labels());
}

} // namespace kgturan
