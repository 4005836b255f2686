#include "kgturan/kneser.hpp"

#include "kgturan/errors.hpp"
#include "kgturan/families.hpp"

#include <algorithm>
#include <map>

namespace kgturan {

namespace {

void extend_tuples(const Hypergraph& rep, int r, std::vector<EdgeId>& cur, VertexSet used,
                   std::vector<std::vector<VertexId>>& out)
{
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    EdgeId start = cur.empty() ? 0 : cur.back() + 1;
    for (EdgeId e = start; e < rep.num_edges(); ++e) {
        const auto& mask = rep.edge_mask(e);
        if (mask.intersects(used))
            continue;
        cur.push_back(e);
        extend_tuples(rep, r, cur, used | mask, out);
        cur.pop_back();
    }
}

} // namespace

KneserInstance kneser_power(const Hypergraph& rep, int r, const KneserOptions& options)
{
    if (r < 2)
        throw InvalidArgument("Kneser uniformity r must be >= 2, got " + std::to_string(r));
    std::size_t cap = r == 2 ? options.max_rep_edges_pairs : options.max_rep_edges_tuples;
    if (!options.unlimited && rep.num_edges() > cap)
        throw_cap("representation hyperedge count", rep.num_edges(), cap);
    if (!rep.fits_bitset())
        throw_cap("representation vertex count", rep.num_vertices(), VertexSet::kCapacity);

    KneserInstance out;
    out.representation = rep;
    out.r = r;
    std::vector<std::vector<VertexId>> edges;
    if (r == 2) {
        out.adjacency = AdjacencyMatrix(rep.num_edges());
        for (EdgeId a = 0; a < rep.num_edges(); ++a)
            for (EdgeId b = a + 1; b < rep.num_edges(); ++b)
                if (!rep.edge_mask(a).intersects(rep.edge_mask(b))) {
                    out.adjacency.connect(a, b);
                    edges.push_back({a, b});
                }
    } else {
        std::vector<EdgeId> cur;
        extend_tuples(rep, r, cur, VertexSet{}, edges);
    }
    out.result = Hypergraph(rep.num_edges(), std::move(edges));
    return out;
}

NamedKneser parse_named_kneser(const std::string& name)
{
    static const std::map<std::string, NamedKneser> kinds = {
        {"kneser", NamedKneser::kneser},         {"schrijver", NamedKneser::schrijver},
        {"circular", NamedKneser::circular},     {"generalized", NamedKneser::generalized},
        {"permutation", NamedKneser::permutation},
    };
    auto it = kinds.find(name);
    if (it == kinds.end())
        throw InvalidArgument("unknown Kneser family '" + name + "'");
    return it->second;
}

std::string to_string(NamedKneser kind)
{
    switch (kind) {
    case NamedKneser::kneser: return "kneser";
    case NamedKneser::schrijver: return "schrijver";
    case NamedKneser::circular: return "circular";
    case NamedKneser::generalized: return "generalized";
    case NamedKneser::permutation: return "permutation";
    }
    return "?";
}

void validate_params(NamedKneser kind, const NamedKneserParams& p)
{
    auto fail = [&](const std::string& why) { throw InvalidArgument(to_string(kind) + ": " + why); };
    switch (kind) {
    case NamedKneser::kneser:
        if (p.k < 1 || p.n < 2 * p.k)
            fail("need k >= 1 and n >= 2k");
        break;
    case NamedKneser::schrijver:
        if (p.k < 1 || p.n < 2 * p.k || p.n < 3)
            fail("need k >= 1, n >= 2k and n >= 3");
        break;
    case NamedKneser::circular:
        if (p.d < 1 || p.n < 2 * p.d || p.n < 3)
            fail("need d >= 1, n >= 2d and n >= 3");
        break;
    case NamedKneser::generalized:
        if (p.s < 0 || p.k <= p.s || p.n < p.k)
            fail("need n >= k > s >= 0");
        break;
    case NamedKneser::permutation:
        if (p.r < 1 || p.m < p.r || p.n < p.r)
            fail("need m, n >= r >= 1");
        break;
    }
}

NamedRepresentation named_representation(NamedKneser kind, const NamedKneserParams& p)
{
    validate_params(kind, p);
    switch (kind) {
    case NamedKneser::kneser:
        return {matching_graph(p.n), PatternFamily::single(matching_graph(p.k))};
    case NamedKneser::schrijver:
        return {cycle_graph(p.n), PatternFamily::single(matching_graph(p.k))};
    case NamedKneser::circular:
        return {cycle_graph(p.n), PatternFamily::single(path_graph(p.d))};
    case NamedKneser::generalized:
        return {complete_uniform_hypergraph(p.n, p.s + 1),
                PatternFamily::single(complete_uniform_hypergraph(p.k, p.s + 1))};
    case NamedKneser::permutation:
        return {complete_bipartite_graph(p.m, p.n), PatternFamily::single(matching_graph(p.r))};
    }
    throw InvalidArgument("unknown Kneser family");
}

namespace {

std::vector<std::vector<VertexId>> k_subsets(int n, int k)
{
    return complete_uniform_hypergraph(n, k).edges();
}

std::string set_label(const std::vector<VertexId>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

bool stable(const std::vector<VertexId>& s, int n, int distance)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            int diff = static_cast<int>(s[j]) - static_cast<int>(s[i]);
            if (diff < distance || diff > n - distance)
                return false;
        }
    return true;
}

std::size_t intersection_size(const std::vector<VertexId>& a, const std::vector<VertexId>& b)
{
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out.size();
}

// Graph on `objects` with u ~ v iff adjacent(u, v).
template <typename T, typename Adj>
Hypergraph object_graph(const std::vector<T>& objects, std::vector<std::string> labels, Adj adjacent)
{
    std::vector<std::vector<VertexId>> edges;
    for (VertexId a = 0; a < objects.size(); ++a)
        for (VertexId b = a + 1; b < objects.size(); ++b)
            if (adjacent(objects[a], objects[b]))
                edges.push_back({a, b});
    return Hypergraph(objects.size(), std::move(edges), std::move(labels));
}

} // namespace

Hypergraph direct_named_graph(NamedKneser kind, const NamedKneserParams& p)
{
    validate_params(kind, p);
    switch (kind) {
    case NamedKneser::kneser:
    case NamedKneser::schrijver: {
        std::vector<std::vector<VertexId>> sets;
        for (auto& s : k_subsets(p.n, p.k))
            if (kind == NamedKneser::kneser || stable(s, p.n, 2))
                sets.push_back(s);
        std::vector<std::string> labels;
        for (auto& s : sets)
            labels.push_back(set_label(s));
        return object_graph(sets, std::move(labels),
                            [](const auto& a, const auto& b) { return intersection_size(a, b) == 0; });
    }
    case NamedKneser::circular: {
        std::vector<int> points;
        std::vector<std::string> labels;
        for (int i = 0; i < p.n; ++i) {
            points.push_back(i);
            labels.push_back(std::to_string(i + 1));
        }
        return object_graph(points, std::move(labels), [&](int a, int b) {
            int diff = std::abs(a - b);
            return p.d <= diff && diff <= p.n - p.d;
        });
    }
    case NamedKneser::generalized: {
        auto sets = k_subsets(p.n, p.k);
        std::vector<std::string> labels;
        for (auto& s : sets)
            labels.push_back(set_label(s));
        return object_graph(sets, std::move(labels), [&](const auto& a, const auto& b) {
            return intersection_size(a, b) <= static_cast<std::size_t>(p.s);
        });
    }
    case NamedKneser::permutation: {
        // (A, f) stored as a vector over [m]: f(x) + 1 for x in A, 0 otherwise.
        std::vector<std::vector<int>> perms;
        for (auto& domain : k_subsets(p.m, p.r)) {
            auto images = k_subsets(p.n, p.r);
            for (auto& image : images) {
                auto img = image;
                do {
                    std::vector<int> f(static_cast<std::size_t>(p.m), 0);
                    for (std::size_t i = 0; i < domain.size(); ++i)
                        f[domain[i]] = static_cast<int>(img[i]) + 1;
                    perms.push_back(std::move(f));
                } while (std::next_permutation(img.begin(), img.end()));
            }
        }
        std::sort(perms.begin(), perms.end());
        std::vector<std::string> labels;
        for (auto& f : perms) {
            std::string s;
            for (int x = 0; x < p.m; ++x)
                if (f[x])
                    s += (s.empty() ? "" : ",") + std::to_string(x + 1) + "->" + std::to_string(f[x]);
            labels.push_back("(" + s + ")");
        }
        return object_graph(perms, std::move(labels), [](const auto& f, const auto& g) {
            for (std::size_t x = 0; x < f.size(); ++x)
                if (f[x] && f[x] == g[x])
                    return false;
            return true;
        });
    }
    }
    throw InvalidArgument("unknown Kneser family");
}

NamedKneserBuild build_named_kneser(NamedKneser kind, const NamedKneserParams& p, std::size_t iso_vertex_cap,
                                    const PatternOptions& pattern_options)
{
    auto rep = named_representation(kind, p);
    NamedKneserBuild out;
    out.kind = kind;
    out.params = p;
    out.host = rep.host;
    out.family = rep.family;
    out.instance = kneser_power(pattern_hypergraph(rep.host, rep.family, pattern_options), 2);
    out.direct = direct_named_graph(kind, p);
    if (out.instance.result.num_vertices() <= iso_vertex_cap)
        out.isomorphism = find_isomorphism(out.instance.result, out.direct);
    return out;
}

RepresentationCheck verify_representation(NamedKneser kind, const NamedKneserParams& p, std::size_t max_vertices)
{
    auto built = build_named_kneser(kind, p, 0);
    if (built.instance.result.num_vertices() > max_vertices)
        throw_cap("representation check vertex count", built.instance.result.num_vertices(), max_vertices);
    RepresentationCheck check;
    auto phi = find_isomorphism(built.instance.result, built.direct);
    if (phi) {
        check.isomorphic = true;
        check.bijection = std::move(*phi);
    }
    return check;
}

} // namespace kgturan
