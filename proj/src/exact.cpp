#include "kgturan/exact.hpp"

#include "kgturan/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace kgturan {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 64;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

void check_size(const Hypergraph& h, const SolverLimits& limits)
{
    std::size_t cap = std::min(limits.max_vertices, kMaskBits);
    if (h.num_vertices() > cap)
        throw_cap("solver vertex count", h.num_vertices(), cap);
}

std::vector<Mask> edge_masks(const Hypergraph& h)
{
    std::vector<Mask> out;
    for (const auto& e : h.edges()) {
        Mask m = 0;
        for (auto v : e)
            m |= bit(v);
        out.push_back(m);
    }
    return out;
}

std::vector<Mask> adjacency(const Hypergraph& g)
{
    std::vector<Mask> adj(g.num_vertices(), 0);
    for (const auto& e : g.edges()) {
        adj[e[0]] |= bit(e[1]);
        adj[e[1]] |= bit(e[0]);
    }
    return adj;
}

std::vector<VertexId> members(Mask m)
{
    std::vector<VertexId> out;
    for_each_bit(m, [&](VertexId v) { out.push_back(v); });
    return out;
}

void require_simple_graph(const Hypergraph& g)
{
    if (!g.is_graph())
        throw InvalidArgument("graph solver needs a 2-uniform hypergraph");
    if (g.has_parallel_edges())
        throw InvalidArgument("graph solver rejects multigraphs");
}

// ---------------------------------------------------------------------------
// Maximum clique with greedy-colouring bounds.

class CliqueSearch {
public:
    explicit CliqueSearch(const std::vector<Mask>& adj) : adj_(adj) { }

    Mask run(Mask candidates)
    {
        expand(candidates, 0, 0);
        return best_;
    }

private:
    void expand(Mask p, Mask r, std::size_t size)
    {
        std::vector<VertexId> order;
        std::vector<std::size_t> bound;
        Mask uncoloured = p;
        std::size_t colour = 0;
        while (uncoloured) {
            ++colour;
            Mask q = uncoloured;
            while (q) {
                auto v = static_cast<VertexId>(std::countr_zero(q));
                q &= ~bit(v) & ~adj_[v];
                uncoloured &= ~bit(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + bound[i] <= best_size_)
                return;
            auto v = order[i];
            Mask next = p & adj_[v];
            if (next == 0) {
                if (size + 1 > best_size_) {
                    best_size_ = size + 1;
                    best_ = r | bit(v);
                }
            } else {
                expand(next, r | bit(v), size + 1);
            }
            p &= ~bit(v);
        }
    }

    const std::vector<Mask>& adj_;
    Mask best_ = 0;
    std::size_t best_size_ = 0;
};

// ---------------------------------------------------------------------------
// Graph colouring.

std::vector<int> dsatur_greedy(const std::vector<Mask>& adj)
{
    std::size_t n = adj.size();
    std::vector<int> colour(n, -1);
    std::vector<Mask> seen(n, 0); // colours present in the neighbourhood
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (colour[v] != -1)
                continue;
            if (best == n || popcount(seen[v]) > popcount(seen[best]) ||
                (popcount(seen[v]) == popcount(seen[best]) && popcount(adj[v]) > popcount(adj[best])))
                best = v;
        }
        int c = std::countr_one(seen[best]);
        colour[best] = c;
        for_each_bit(adj[best], [&](VertexId u) { seen[u] |= bit(static_cast<std::size_t>(c)); });
    }
    return colour;
}

class KColouring {
public:
    KColouring(const std::vector<Mask>& adj, std::size_t k)
        : adj_(adj), n_(adj.size()), k_(k), colour_(n_, -1), count_(n_ * k, 0), sat_(n_, 0)
    {
        for (std::size_t v = 0; v < n_; ++v)
            degree_.push_back(popcount(adj[v]));
    }

    bool run(const std::vector<VertexId>& clique)
    {
        if (clique.size() > k_)
            return false;
        for (std::size_t i = 0; i < clique.size(); ++i)
            assign(clique[i], static_cast<int>(i));
        return search(clique.size(), clique.size());
    }

    const std::vector<int>& colouring() const { return colour_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void assign(std::size_t v, int c)
    {
        colour_[v] = c;
        for_each_bit(adj_[v], [&](VertexId u) {
            if (count_[u * k_ + static_cast<std::size_t>(c)]++ == 0)
                ++sat_[u];
        });
    }

    void unassign(std::size_t v)
    {
        int c = colour_[v];
        colour_[v] = -1;
        for_each_bit(adj_[v], [&](VertexId u) {
            if (--count_[u * k_ + static_cast<std::size_t>(c)] == 0)
                --sat_[u];
        });
    }

    bool search(std::size_t coloured, std::size_t used)
    {
        ++nodes_;
        if (coloured == n_)
            return true;
        std::size_t v = n_;
        for (std::size_t u = 0; u < n_; ++u) {
            if (colour_[u] != -1)
                continue;
            if (v == n_ || sat_[u] > sat_[v] || (sat_[u] == sat_[v] && degree_[u] > degree_[v]))
                v = u;
        }
        if (sat_[v] >= k_)
            return false;
        std::size_t limit = std::min(used + 1, k_);
        for (std::size_t c = 0; c < limit; ++c) {
            if (count_[v * k_ + c])
                continue;
            assign(v, static_cast<int>(c));
            if (search(coloured + 1, std::max(used, c + 1)))
                return true;
            unassign(v);
        }
        return false;
    }

    const std::vector<Mask>& adj_;
    std::size_t n_, k_;
    std::vector<int> colour_;
    std::vector<int> count_;
    std::vector<std::size_t> sat_;
    std::vector<std::size_t> degree_;
    std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Hypergraph t-colouring with forward checking on nearly complete hyperedges.

class HyperColouring {
public:
    HyperColouring(const Hypergraph& h, std::size_t t)
        : h_(h), n_(h.num_vertices()), t_(t), inc_(h.incidence()), colour_(n_, -1),
          coloured_in_(h.num_edges(), 0), mono_(h.num_edges(), kNone), forbid_(n_ * t, 0), forbidden_(n_, 0)
    {
    }

    bool run() { return search(0, 0); }
    const std::vector<int>& colouring() const { return colour_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    static constexpr int kNone = -1;
    static constexpr int kMixed = -2;

    struct Saved {
        EdgeId edge;
        int mono;
        VertexId forbidden_vertex; // n_ when nothing was forbidden
    };

    void forbid(VertexId u, int c, int delta)
    {
        auto& slot = forbid_[u * t_ + static_cast<std::size_t>(c)];
        if (delta > 0 && slot++ == 0)
            ++forbidden_[u];
        else if (delta < 0 && --slot == 0)
            --forbidden_[u];
    }

    void assign(VertexId v, int c, std::vector<Saved>& trail)
    {
        colour_[v] = c;
        for (auto e : inc_[v]) {
            Saved s{e, mono_[e], static_cast<VertexId>(n_)};
            int before = mono_[e];
            ++coloured_in_[e];
            mono_[e] = coloured_in_[e] == 1 ? c : (before == c ? c : kMixed);
            const auto& m = h_.edge(e);
            if (mono_[e] >= 0 && coloured_in_[e] + 1 == m.size()) {
                for (auto u : m)
                    if (colour_[u] == -1) {
                        forbid(u, mono_[e], +1);
                        s.forbidden_vertex = u;
                    }
            }
            trail.push_back(s);
        }
    }

    void unassign(VertexId v, std::vector<Saved>& trail)
    {
        int c = colour_[v];
        for (std::size_t i = 0; i < inc_[v].size(); ++i) {
            Saved s = trail.back();
            trail.pop_back();
            if (s.forbidden_vertex != n_)
                forbid(s.forbidden_vertex, mono_[s.edge], -1);
            mono_[s.edge] = s.mono;
            --coloured_in_[s.edge];
        }
        (void)c;
        colour_[v] = -1;
    }

    bool search(std::size_t coloured, std::size_t used)
    {
        ++nodes_;
        if (coloured == n_)
            return true;
        VertexId v = static_cast<VertexId>(n_);
        for (VertexId u = 0; u < n_; ++u) {
            if (colour_[u] != -1)
                continue;
            if (v == n_ || forbidden_[u] > forbidden_[v] ||
                (forbidden_[u] == forbidden_[v] && inc_[u].size() > inc_[v].size()))
                v = u;
        }
        if (forbidden_[v] >= t_)
            return false;
        std::size_t limit = std::min(used + 1, t_);
        for (std::size_t c = 0; c < limit; ++c) {
            if (forbid_[v * t_ + c])
                continue;
            std::vector<Saved> trail;
            assign(v, static_cast<int>(c), trail);
            if (search(coloured + 1, std::max(used, c + 1)))
                return true;
            unassign(v, trail);
        }
        return false;
    }

    const Hypergraph& h_;
    std::size_t n_, t_;
    std::vector<std::vector<EdgeId>> inc_;
    std::vector<int> colour_;
    std::vector<std::size_t> coloured_in_;
    std::vector<int> mono_;
    std::vector<int> forbid_;
    std::vector<std::size_t> forbidden_;
    std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Independent sets in hypergraphs.

class IndependentSearch {
public:
    IndependentSearch(std::size_t n, const std::vector<Mask>& edges) : through_(n)
    {
        for (auto e : edges)
            for_each_bit(e, [&](VertexId v) { through_[v].push_back(e); });
    }

    Mask run(Mask candidates)
    {
        expand(0, candidates);
        return best_;
    }

private:
    void expand(Mask chosen, Mask candidates)
    {
        if (popcount(chosen) + popcount(candidates) <= popcount(best_) && best_ != 0)
            return;
        if (candidates == 0) {
            if (popcount(chosen) >= popcount(best_))
                best_ = chosen;
            return;
        }
        auto v = static_cast<VertexId>(std::countr_zero(candidates));
        Mask with = chosen | bit(v);
        Mask next = candidates & ~bit(v);
        for (auto e : through_[v]) {
            Mask rest = e & ~with;
            if (popcount(rest) == 1)
                next &= ~rest;
        }
        expand(with, next);
        expand(chosen, candidates & ~bit(v));
    }

    std::vector<std::vector<Mask>> through_;
    Mask best_ = 0;
};

class CoverSearch {
public:
    explicit CoverSearch(const std::vector<Mask>& edges) : edges_(edges) { }

    Mask run(Mask everything)
    {
        best_ = everything;
        best_size_ = popcount(everything) + 1;
        expand(0, 0);
        return best_;
    }

private:
    // Greedy packing of pairwise disjoint unhit edges: a lower bound on what is still needed.
    std::size_t packing(Mask chosen) const
    {
        Mask used = 0;
        std::size_t count = 0;
        for (auto e : edges_)
            if (!(e & chosen) && !(e & used)) {
                used |= e;
                ++count;
            }
        return count;
    }

    void expand(Mask chosen, Mask banned)
    {
        std::size_t size = popcount(chosen);
        if (size + packing(chosen) >= best_size_)
            return;
        const Mask* pick = nullptr;
        std::size_t pick_free = kMaskBits + 1;
        for (const auto& e : edges_) {
            if (e & chosen)
                continue;
            std::size_t free = popcount(e & ~banned);
            if (free == 0)
                return;
            if (free < pick_free) {
                pick = &e;
                pick_free = free;
            }
        }
        if (!pick) {
            best_ = chosen;
            best_size_ = size;
            return;
        }
        Mask options = *pick & ~banned;
        Mask tried = 0;
        for_each_bit(options, [&](VertexId v) {
            expand(chosen | bit(v), banned | tried);
            tried |= bit(v);
        });
    }

    const std::vector<Mask>& edges_;
    Mask best_ = 0;
    std::size_t best_size_ = 0;
};

Mask all_vertices(std::size_t n) { return n == kMaskBits ? ~Mask{0} : bit(n) - 1; }

} // namespace

std::size_t ChromaticValue::value() const
{
    if (!value_)
        throw InvalidArgument("chromatic value is unbounded");
    return *value_;
}

std::string ChromaticValue::to_string() const { return value_ ? std::to_string(*value_) : "unbounded"; }

bool validate_coloring(const Hypergraph& h, const ColoringCertificate& c)
{
    if (c.assignment.size() != h.num_vertices())
        return false;
    for (int colour : c.assignment)
        if (colour < 0 || static_cast<std::size_t>(colour) >= c.num_colors)
            return false;
    for (const auto& e : h.edges()) {
        bool mono = true;
        for (auto v : e)
            mono = mono && c.assignment[v] == c.assignment[e.front()];
        if (mono)
            return false;
    }
    return true;
}

IndependenceResult independence_number(const Hypergraph& h, const SolverLimits& limits)
{
    check_size(h, limits);
    Mask candidates = all_vertices(h.num_vertices());
    auto edges = edge_masks(h);
    for (auto e : edges)
        if (popcount(e) == 1)
            candidates &= ~e;
    Mask best;
    if (h.is_graph()) {
        // Independent sets of a graph are the cliques of its complement.
        auto adj = adjacency(h);
        std::vector<Mask> complement(h.num_vertices());
        for (std::size_t v = 0; v < h.num_vertices(); ++v)
            complement[v] = all_vertices(h.num_vertices()) & ~adj[v] & ~bit(v);
        best = CliqueSearch(complement).run(candidates);
    } else {
        best = IndependentSearch(h.num_vertices(), edges).run(candidates);
    }
    return {popcount(best), members(best)};
}

CoverResult covering_number(const Hypergraph& h, const SolverLimits& limits)
{
    check_size(h, limits);
    auto edges = edge_masks(h);
    Mask best = CoverSearch(edges).run(all_vertices(h.num_vertices()));
    return {popcount(best), members(best)};
}

std::vector<VertexId> maximum_clique(const Hypergraph& g, const SolverLimits& limits)
{
    require_simple_graph(g);
    check_size(g, limits);
    return members(CliqueSearch(adjacency(g)).run(all_vertices(g.num_vertices())));
}

bool is_k_colorable(const Hypergraph& g, std::size_t k, ColoringCertificate* coloring, const SolverLimits& limits)
{
    require_simple_graph(g);
    check_size(g, limits);
    if (g.num_vertices() == 0)
        return true;
    if (k == 0)
        return false;
    auto adj = adjacency(g);
    KColouring search(adj, k);
    auto clique = members(CliqueSearch(adj).run(all_vertices(g.num_vertices())));
    if (!search.run(clique))
        return false;
    if (coloring)
        *coloring = {k, search.colouring(), ColoringKind::graph};
    return true;
}

ChromaticResult chromatic_number_graph(const Hypergraph& g, const SolverLimits& limits)
{
    require_simple_graph(g);
    check_size(g, limits);
    ChromaticResult out;
    std::size_t n = g.num_vertices();
    if (n == 0) {
        out.value = ChromaticValue(0);
        out.coloring = {0, {}, ColoringKind::graph};
        return out;
    }
    auto adj = adjacency(g);
    auto greedy = dsatur_greedy(adj);
    std::size_t upper = static_cast<std::size_t>(*std::max_element(greedy.begin(), greedy.end())) + 1;
    out.coloring = {upper, greedy, ColoringKind::graph};
    out.clique = members(CliqueSearch(adj).run(all_vertices(n)));
    for (std::size_t k = std::max<std::size_t>(out.clique.size(), 1); k < upper; ++k) {
        KColouring search(adj, k);
        bool ok = search.run(out.clique);
        out.nodes += search.nodes();
        if (ok) {
            out.coloring = {k, search.colouring(), ColoringKind::graph};
            break;
        }
        out.refuted_colors.push_back(k);
    }
    out.value = ChromaticValue(out.coloring.num_colors);
    return out;
}

ChromaticResult chromatic_number_hypergraph(const Hypergraph& h, const SolverLimits& limits)
{
    ChromaticResult out;
    if (h.min_edge_size() == 1) {
        out.value = ChromaticValue::unbounded();
        return out;
    }
    if (h.num_edges() > 0 && h.is_graph()) {
        std::set<std::vector<VertexId>> distinct(h.edges().begin(), h.edges().end());
        out = chromatic_number_graph(Hypergraph(h.num_vertices(), {distinct.begin(), distinct.end()}), limits);
        out.coloring.kind = ColoringKind::hypergraph;
        return out;
    }
    check_size(h, limits);
    std::size_t n = h.num_vertices();
    if (n == 0) {
        out.value = ChromaticValue(0);
        return out;
    }
    if (h.num_edges() == 0) {
        out.value = ChromaticValue(1);
        out.coloring = {1, std::vector<int>(n, 0), ColoringKind::hypergraph};
        return out;
    }
    out.refuted_colors.push_back(1);
    for (std::size_t t = 2;; ++t) {
        HyperColouring search(h, t);
        bool ok = search.run();
        out.nodes += search.nodes();
        if (ok) {
            out.value = ChromaticValue(t);
            out.coloring = {t, search.colouring(), ColoringKind::hypergraph};
            return out;
        }
        out.refuted_colors.push_back(t);
    }
}

ColoringCertificate cover_coloring(const Hypergraph& rep, int r, const std::optional<std::vector<VertexId>>& independent)
{
    if (r < 2)
        throw InvalidArgument("cover colouring needs r >= 2");
    std::vector<VertexId> s = independent ? *independent : independence_number(rep).witness;
    std::vector<char> in_s(rep.num_vertices(), 0);
    for (auto v : s) {
        if (v >= rep.num_vertices())
            throw InvalidArgument("independent set vertex out of range");
        in_s[v] = 1;
    }
    for (const auto& e : rep.edges())
        if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return in_s[v]; }))
            throw InvalidArgument("cover colouring: the given vertex set contains a hyperedge");

    std::size_t part_size = static_cast<std::size_t>(r - 1);
    std::vector<int> part(rep.num_vertices(), -1);
    std::size_t rest = 0;
    for (VertexId v = 0; v < rep.num_vertices(); ++v)
        if (!in_s[v])
            part[v] = static_cast<int>(rest++ / part_size);
    ColoringCertificate out;
    out.num_colors = (rest + part_size - 1) / part_size;
    out.kind = r == 2 ? ColoringKind::graph : ColoringKind::hypergraph;
    for (const auto& e : rep.edges()) {
        int colour = -1;
        for (auto v : e)
            if (part[v] != -1 && (colour == -1 || part[v] < colour))
                colour = part[v];
        out.assignment.push_back(colour);
    }
    return out;
}

Hypergraph augment_representation(const Hypergraph& rep, const ColoringCertificate& coloring)
{
    if (coloring.assignment.size() != rep.num_edges())
        throw InvalidArgument("colouring does not cover the Kneser graph vertices");
    for (int c : coloring.assignment)
        if (c < 0 || static_cast<std::size_t>(c) >= coloring.num_colors)
            throw InvalidArgument("colour index out of range");
    if (!rep.fits_bitset())
        throw_cap("representation vertex count", rep.num_vertices(), VertexSet::kCapacity);
    for (EdgeId a = 0; a < rep.num_edges(); ++a)
        for (EdgeId b = a + 1; b < rep.num_edges(); ++b)
            if (coloring.assignment[a] == coloring.assignment[b] && !rep.edge_mask(a).intersects(rep.edge_mask(b)))
                throw InvalidArgument("colouring is not proper for KG(rep): hyperedges " + std::to_string(a) +
                                      " and " + std::to_string(b) + " are disjoint and share a colour");
    std::size_t n = rep.num_vertices();
    std::vector<std::vector<VertexId>> edges;
    for (EdgeId e = 0; e < rep.num_edges(); ++e) {
        auto m = rep.edge(e);
        m.push_back(static_cast<VertexId>(n + static_cast<std::size_t>(coloring.assignment[e])));
        edges.push_back(std::move(m));
    }
    std::vector<std::string> labels;
    if (rep.has_labels()) {
        labels = rep.labels();
        for (std::size_t c = 0; c < coloring.num_colors; ++c)
            labels.push_back("colour" + std::to_string(c));
    }
    return Hypergraph(n + coloring.num_colors, std::move(edges), std::move(labels));
}

} // namespace kgturan
