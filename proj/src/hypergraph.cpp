#include "kgturan/hypergraph.hpp"

#include "kgturan/errors.hpp"

#include <algorithm>
#include <set>

namespace kgturan {

Hypergraph::Hypergraph(std::size_t n, std::vector<std::vector<VertexId>> edges,
                       std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels))
{
    if (!labels_.empty() && labels_.size() != n_)
        throw InvalidArgument("label count " + std::to_string(labels_.size()) +
                              " does not match vertex count " + std::to_string(n_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        if (e.empty())
            throw InvalidArgument("hyperedge " + std::to_string(i) + " is empty");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidArgument("hyperedge " + std::to_string(i) + " repeats a vertex");
        if (e.back() >= n_)
            throw InvalidArgument("hyperedge " + std::to_string(i) + " has vertex " +
                                  std::to_string(e.back()) + " outside [0, " + std::to_string(n_) + ")");
    }
    if (fits_bitset()) {
        masks_.reserve(edges_.size());
        for (const auto& e : edges_)
            masks_.push_back(VertexSet::of(e));
    }
}

std::string Hypergraph::label(VertexId v) const
{
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

const VertexSet& Hypergraph::edge_mask(EdgeId id) const
{
    if (!fits_bitset())
        throw_cap("vertex count", n_, VertexSet::kCapacity);
    return masks_.at(id);
}

std::vector<std::size_t> Hypergraph::degrees() const
{
    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_)
        for (auto v : e)
            ++deg[v];
    return deg;
}

std::vector<VertexId> Hypergraph::isolated_vertices() const
{
    std::vector<VertexId> out;
    auto deg = degrees();
    for (VertexId v = 0; v < n_; ++v)
        if (deg[v] == 0)
            out.push_back(v);
    return out;
}

std::size_t Hypergraph::max_edge_size() const
{
    std::size_t m = 0;
    for (const auto& e : edges_)
        m = std::max(m, e.size());
    return m;
}

std::size_t Hypergraph::min_edge_size() const
{
    if (edges_.empty())
        return 0;
    std::size_t m = edges_.front().size();
    for (const auto& e : edges_)
        m = std::min(m, e.size());
    return m;
}

bool Hypergraph::is_uniform(std::size_t k) const
{
    return std::all_of(edges_.begin(), edges_.end(), [k](const auto& e) { return e.size() == k; });
}

bool Hypergraph::has_parallel_edges() const
{
    std::set<std::vector<VertexId>> seen;
    for (const auto& e : edges_)
        if (!seen.insert(e).second)
            return true;
    return false;
}

std::vector<std::vector<EdgeId>> Hypergraph::incidence() const
{
    std::vector<std::vector<EdgeId>> inc(n_);
    for (EdgeId i = 0; i < edges_.size(); ++i)
        for (auto v : edges_[i])
            inc[v].push_back(i);
    return inc;
}

Hypergraph Hypergraph::without_isolated_vertices() const
{
    auto deg = degrees();
    std::vector<VertexId> remap(n_, 0);
    std::vector<std::string> labels;
    VertexId next = 0;
    for (VertexId v = 0; v < n_; ++v) {
        if (deg[v] == 0)
            continue;
        remap[v] = next++;
        if (!labels_.empty())
            labels.push_back(labels_[v]);
    }
    auto edges = edges_;
    for (auto& e : edges)
        for (auto& v : e)
            v = remap[v];
    return Hypergraph(next, std::move(edges), std::move(labels));
}

Hypergraph Hypergraph::with_isolated_vertices(std::size_t extra) const
{
    auto labels = labels_;
    if (!labels.empty())
        for (std::size_t i = 0; i < extra; ++i)
            labels.push_back("iso" + std::to_string(i));
    return Hypergraph(n_ + extra, edges_, std::move(labels));
}

Hypergraph induced_restriction(const Hypergraph& h, const RestrictionSpec& spec)
{
    std::vector<int> owner(h.num_vertices(), -1);
    for (std::size_t p = 0; p < spec.parts.size(); ++p) {
        for (auto v : spec.parts[p]) {
            if (v >= h.num_vertices())
                throw InvalidArgument("restriction part vertex " + std::to_string(v) + " out of range");
            if (owner[v] != -1)
                throw InvalidArgument("restriction parts overlap at vertex " + std::to_string(v));
            owner[v] = static_cast<int>(p);
        }
    }
    std::vector<VertexId> remap(h.num_vertices(), 0);
    std::vector<std::string> labels;
    VertexId next = 0;
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
        if (owner[v] == -1)
            continue;
        remap[v] = next++;
        labels.push_back(h.label(v));
    }
    std::vector<std::vector<VertexId>> edges;
    for (const auto& e : h.edges()) {
        int part = owner[e.front()];
        if (part == -1)
            continue;
        if (!std::all_of(e.begin(), e.end(), [&](VertexId v) { return owner[v] == part; }))
            continue;
        std::vector<VertexId> mapped;
        for (auto v : e)
            mapped.push_back(remap[v]);
        edges.push_back(std::move(mapped));
    }
    return Hypergraph(next, std::move(edges), std::move(labels));
}

} // namespace kgturan
