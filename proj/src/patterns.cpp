#include "kgturan/patterns.hpp"

#include "kgturan/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace kgturan {

PatternFamily::PatternFamily(std::vector<Hypergraph> patterns) : patterns_(std::move(patterns))
{
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (patterns_[i].num_edges() == 0)
            throw InvalidArgument("pattern " + std::to_string(i) + " has no hyperedge");
        if (!patterns_[i].isolated_vertices().empty())
            throw InvalidArgument("pattern " + std::to_string(i) + " has an isolated vertex");
    }
}

namespace {

// Pattern edges in placement order plus, per step, which member vertices are
// first seen at that step.
struct CompiledPattern {
    const Hypergraph* pattern = nullptr;
    std::vector<EdgeId> order;
    std::vector<std::vector<VertexId>> fresh;
    std::vector<std::vector<VertexId>> seen;
};

CompiledPattern compile(const Hypergraph& p)
{
    CompiledPattern c;
    c.pattern = &p;
    auto deg = p.degrees();
    std::vector<char> placed(p.num_edges(), 0), covered(p.num_vertices(), 0);
    auto incidence = [&](EdgeId e) {
        std::size_t s = 0;
        for (auto v : p.edge(e))
            s += deg[v];
        return s;
    };
    for (std::size_t step = 0; step < p.num_edges(); ++step) {
        EdgeId best = 0;
        bool have = false;
        std::tuple<std::size_t, std::size_t, std::size_t> best_key{};
        for (EdgeId e = 0; e < p.num_edges(); ++e) {
            if (placed[e])
                continue;
            std::size_t old = 0;
            for (auto v : p.edge(e))
                old += covered[v] ? 1 : 0;
            std::tuple<std::size_t, std::size_t, std::size_t> key{old, p.edge(e).size(), incidence(e)};
            if (!have || key > best_key) {
                best = e;
                best_key = key;
                have = true;
            }
        }
        placed[best] = 1;
        c.order.push_back(best);
        std::vector<VertexId> fresh, seen;
        for (auto v : p.edge(best)) {
            if (covered[v])
                seen.push_back(v);
            else
                fresh.push_back(v);
            covered[v] = 1;
        }
        c.fresh.push_back(std::move(fresh));
        c.seen.push_back(std::move(seen));
    }
    return c;
}

class OccurrenceSearch {
public:
    OccurrenceSearch(const Hypergraph& host, const CompiledPattern& pattern, std::size_t cap)
        : host_(host), pat_(pattern), cap_(cap), incidence_(host.incidence()),
          phi_(pattern.pattern->num_vertices(), kUnmapped), owner_(host.num_vertices(), kUnmapped),
          edge_used_(host.num_edges(), 0)
    {
        for (EdgeId e = 0; e < host.num_edges(); ++e)
            by_size_[host.edge(e).size()].push_back(e);
    }

    // Candidates for the first placement step; used to stripe work across threads.
    std::vector<EdgeId> first_candidates() const { return candidates(0); }

    void run(const std::vector<EdgeId>& first)
    {
        for (auto e : first)
            try_edge(0, e);
    }

    std::set<std::vector<EdgeId>>& found() { return found_; }

private:
    static constexpr VertexId kUnmapped = ~VertexId{0};

    std::vector<EdgeId> candidates(std::size_t step) const
    {
        EdgeId f = pat_.order[step];
        std::size_t size = pat_.pattern->edge(f).size();
        if (!pat_.seen[step].empty()) {
            std::vector<EdgeId> out;
            for (auto e : incidence_[phi_[pat_.seen[step].front()]])
                if (host_.edge(e).size() == size)
                    out.push_back(e);
            return out;
        }
        auto it = by_size_.find(size);
        return it == by_size_.end() ? std::vector<EdgeId>{} : it->second;
    }

    void search(std::size_t step)
    {
        if (step == pat_.order.size()) {
            auto ids = chosen_;
            std::sort(ids.begin(), ids.end());
            found_.insert(std::move(ids));
            if (found_.size() > cap_)
                throw_cap("pattern occurrence count", found_.size(), cap_);
            return;
        }
        for (auto e : candidates(step))
            try_edge(step, e);
    }

    void try_edge(std::size_t step, EdgeId e)
    {
        if (edge_used_[e])
            return;
        const auto& members = host_.edge(e);
        const auto& fresh = pat_.fresh[step];
        EdgeId f = pat_.order[step];
        const auto& pattern_edge = pat_.pattern->edge(f);
        std::vector<VertexId> free_vertices;
        for (auto w : members) {
            auto u = owner_[w];
            if (u == kUnmapped)
                free_vertices.push_back(w);
            else if (!std::binary_search(pattern_edge.begin(), pattern_edge.end(), u))
                return;
        }
        for (auto u : pat_.seen[step])
            if (!std::binary_search(members.begin(), members.end(), phi_[u]))
                return;
        if (free_vertices.size() != fresh.size())
            return;

        edge_used_[e] = 1;
        chosen_.push_back(e);
        // Every bijection fresh -> free_vertices.
        std::sort(free_vertices.begin(), free_vertices.end());
        do {
            for (std::size_t i = 0; i < fresh.size(); ++i) {
                phi_[fresh[i]] = free_vertices[i];
                owner_[free_vertices[i]] = fresh[i];
            }
            search(step + 1);
            for (std::size_t i = 0; i < fresh.size(); ++i) {
                phi_[fresh[i]] = kUnmapped;
                owner_[free_vertices[i]] = kUnmapped;
            }
        } while (std::next_permutation(free_vertices.begin(), free_vertices.end()));
        chosen_.pop_back();
        edge_used_[e] = 0;
    }

    const Hypergraph& host_;
    const CompiledPattern& pat_;
    std::size_t cap_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::map<std::size_t, std::vector<EdgeId>> by_size_;
    std::vector<VertexId> phi_;
    std::vector<VertexId> owner_;
    std::vector<char> edge_used_;
    std::vector<EdgeId> chosen_;
    std::set<std::vector<EdgeId>> found_;
};

std::set<std::vector<EdgeId>> occurrences_of(const Hypergraph& host, const Hypergraph& pattern,
                                            const PatternOptions& options)
{
    auto compiled = compile(pattern);
    OccurrenceSearch root(host, compiled, options.max_occurrences);
    auto first = root.first_candidates();
    std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, first.size()));
    if (workers == 1) {
        root.run(first);
        return std::move(root.found());
    }
    std::vector<std::vector<EdgeId>> stripes(workers);
    for (std::size_t i = 0; i < first.size(); ++i)
        stripes[i % workers].push_back(first[i]);
    std::vector<OccurrenceSearch> searches(workers, root);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                try {
                    searches[w].run(stripes[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);
    std::set<std::vector<EdgeId>> merged;
    for (auto& s : searches) {
        merged.merge(s.found());
        if (merged.size() > options.max_occurrences)
            throw_cap("pattern occurrence count", merged.size(), options.max_occurrences);
    }
    return merged;
}

} // namespace

std::vector<PatternOccurrence> enumerate_occurrences(const Hypergraph& host, const PatternFamily& family,
                                                     const PatternOptions& options)
{
    if (host.num_edges() > options.max_host_edges)
        throw_cap("host hyperedge count", host.num_edges(), options.max_host_edges);

    // One search per isomorphism class of patterns.
    std::vector<std::size_t> representative(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        representative[i] = i;
        for (std::size_t j = 0; j < i; ++j)
            if (representative[j] == j && are_isomorphic(family[j], family[i])) {
                representative[i] = j;
                break;
            }
    }

    std::map<std::vector<EdgeId>, std::set<std::size_t>> table;
    std::size_t total = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (representative[i] != i)
            continue;
        for (auto& ids : occurrences_of(host, family[i], options)) {
            table[ids].insert(i);
            if (++total > options.max_occurrences)
                throw_cap("pattern occurrence count", total, options.max_occurrences);
        }
    }
    std::vector<PatternOccurrence> out;
    out.reserve(total);
    for (auto& [ids, patterns] : table)
        for (auto p : patterns)
            out.push_back({p, ids});
    return out;
}

Hypergraph pattern_hypergraph_from(std::size_t host_edges, const std::vector<PatternOccurrence>& occurrences)
{
    std::vector<std::vector<VertexId>> edges;
    for (const auto& occ : occurrences)
        if (edges.empty() || edges.back() != occ.edge_ids)
            edges.push_back(occ.edge_ids);
    // Occurrences are sorted by edge-id set, so equal sets are adjacent.
    return Hypergraph(host_edges, std::move(edges));
}

Hypergraph pattern_hypergraph(const Hypergraph& host, const PatternFamily& family, const PatternOptions& options)
{
    return pattern_hypergraph_from(host.num_edges(), enumerate_occurrences(host, family, options));
}

Hypergraph edge_subhypergraph(const Hypergraph& host, const std::vector<EdgeId>& edge_ids)
{
    std::vector<std::vector<VertexId>> edges;
    for (auto id : edge_ids)
        edges.push_back(host.edge(id));
    return Hypergraph(host.num_vertices(), std::move(edges)).without_isolated_vertices();
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

using Signature = std::vector<std::vector<std::size_t>>;

// Joint colour refinement of both hypergraphs so colours are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Hypergraph& a, const Hypergraph& b)
{
    const Hypergraph* g[2] = {&a, &b};
    std::vector<std::size_t> colour[2] = {std::vector<std::size_t>(a.num_vertices(), 0),
                                          std::vector<std::size_t>(b.num_vertices(), 0)};
    std::vector<std::vector<EdgeId>> inc[2] = {a.incidence(), b.incidence()};
    std::size_t classes = 1;
    for (std::size_t round = 0; round <= a.num_vertices(); ++round) {
        std::map<std::pair<std::size_t, Signature>, std::size_t> palette;
        std::vector<std::pair<std::size_t, Signature>> sigs[2];
        for (int s = 0; s < 2; ++s) {
            for (VertexId v = 0; v < g[s]->num_vertices(); ++v) {
                Signature sig;
                for (auto e : inc[s][v]) {
                    std::vector<std::size_t> entry{g[s]->edge(e).size()};
                    for (auto u : g[s]->edge(e))
                        if (u != v)
                            entry.push_back(colour[s][u]);
                    std::sort(entry.begin() + 1, entry.end());
                    sig.push_back(std::move(entry));
                }
                std::sort(sig.begin(), sig.end());
                sigs[s].emplace_back(colour[s][v], std::move(sig));
                palette.emplace(sigs[s].back(), 0);
            }
        }
        std::size_t next = 0;
        for (auto& [key, id] : palette)
            id = next++;
        for (int s = 0; s < 2; ++s)
            for (VertexId v = 0; v < g[s]->num_vertices(); ++v)
                colour[s][v] = palette[sigs[s][v]];
        if (next == classes)
            break;
        classes = next;
    }
    return {colour[0], colour[1]};
}

class IsoSearch {
public:
    IsoSearch(const Hypergraph& a, const Hypergraph& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb)
        : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), inc_a_(a.incidence()), inc_b_(b.incidence()),
          phi_(a.num_vertices(), kNone), inv_(b.num_vertices(), kNone)
    {
        for (const auto& e : a.edges())
            ++count_a_[e];
        for (const auto& e : b.edges())
            ++count_b_[e];
        build_order();
    }

    std::optional<std::vector<VertexId>> run()
    {
        if (search(0))
            return phi_;
        return std::nullopt;
    }

private:
    static constexpr VertexId kNone = ~VertexId{0};

    void build_order()
    {
        std::map<std::size_t, std::size_t> class_size;
        for (auto c : ca_)
            ++class_size[c];
        std::vector<char> placed(a_.num_vertices(), 0);
        std::vector<std::size_t> links(a_.num_vertices(), 0);
        for (std::size_t step = 0; step < a_.num_vertices(); ++step) {
            VertexId best = kNone;
            for (VertexId v = 0; v < a_.num_vertices(); ++v) {
                if (placed[v])
                    continue;
                if (best == kNone || links[v] > links[best] ||
                    (links[v] == links[best] && class_size[ca_[v]] < class_size[ca_[best]]))
                    best = v;
            }
            placed[best] = 1;
            order_.push_back(best);
            for (auto e : inc_a_[best])
                for (auto u : a_.edge(e))
                    ++links[u];
        }
    }

    bool consistent(VertexId v, VertexId w) const
    {
        std::vector<VertexId> image;
        for (auto e : inc_a_[v]) {
            const auto& members = a_.edge(e);
            image.clear();
            bool complete = true;
            for (auto u : members) {
                if (phi_[u] == kNone) {
                    complete = false;
                    break;
                }
                image.push_back(phi_[u]);
            }
            if (!complete)
                continue;
            std::sort(image.begin(), image.end());
            auto it = count_b_.find(image);
            if (it == count_b_.end() || it->second != count_a_.at(members))
                return false;
        }
        for (auto g : inc_b_[w]) {
            const auto& members = b_.edge(g);
            image.clear();
            bool complete = true;
            for (auto u : members) {
                if (inv_[u] == kNone) {
                    complete = false;
                    break;
                }
                image.push_back(inv_[u]);
            }
            if (!complete)
                continue;
            std::sort(image.begin(), image.end());
            auto it = count_a_.find(image);
            if (it == count_a_.end() || it->second != count_b_.at(members))
                return false;
        }
        return true;
    }

    bool search(std::size_t idx)
    {
        if (idx == order_.size())
            return true;
        VertexId v = order_[idx];
        for (VertexId w = 0; w < b_.num_vertices(); ++w) {
            if (inv_[w] != kNone || cb_[w] != ca_[v])
                continue;
            phi_[v] = w;
            inv_[w] = v;
            if (consistent(v, w) && search(idx + 1))
                return true;
            phi_[v] = kNone;
            inv_[w] = kNone;
        }
        return false;
    }

    const Hypergraph& a_;
    const Hypergraph& b_;
    std::vector<std::size_t> ca_, cb_;
    std::vector<std::vector<EdgeId>> inc_a_, inc_b_;
    std::map<std::vector<VertexId>, std::size_t> count_a_, count_b_;
    std::vector<VertexId> order_;
    std::vector<VertexId> phi_, inv_;
};

} // namespace

std::optional<std::vector<VertexId>> find_isomorphism(const Hypergraph& a_in, const Hypergraph& b_in,
                                                      bool keep_isolated)
{
    const Hypergraph a = keep_isolated ? a_in : a_in.without_isolated_vertices();
    const Hypergraph b = keep_isolated ? b_in : b_in.without_isolated_vertices();
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return std::nullopt;
    auto sizes = [](const Hypergraph& h) {
        std::vector<std::size_t> s;
        for (const auto& e : h.edges())
            s.push_back(e.size());
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(a) != sizes(b))
        return std::nullopt;
    auto [ca, cb] = refine(a, b);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return std::nullopt;
    return IsoSearch(a, b, std::move(ca), std::move(cb)).run();
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, bool keep_isolated)
{
    return find_isomorphism(a, b, keep_isolated).has_value();
}

bool is_isomorphism(const Hypergraph& a, const Hypergraph& b, const std::vector<VertexId>& phi)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() || phi.size() != a.num_vertices())
        return false;
    std::vector<char> hit(b.num_vertices(), 0);
    for (auto w : phi) {
        if (w >= b.num_vertices() || hit[w])
            return false;
        hit[w] = 1;
    }
    std::multiset<std::vector<VertexId>> image, target(b.edges().begin(), b.edges().end());
    for (const auto& e : a.edges()) {
        std::vector<VertexId> m;
        for (auto v : e)
            m.push_back(phi[v]);
        std::sort(m.begin(), m.end());
        image.insert(std::move(m));
    }
    return image == target;
}

} // namespace kgturan
