#include "kgturan/turan.hpp"

#include "kgturan/errors.hpp"
#include "kgturan/families.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace kgturan {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

Mask low_bits(std::size_t count) { return count >= 64 ? ~Mask{0} : bit(count) - 1; }

void check_edges(const Hypergraph& host, std::size_t cap, const char* what)
{
    if (host.num_edges() > cap)
        throw_cap(what, host.num_edges(), cap);
}

// Branch and bound over host edges in id order: include when still free, then exclude.
class ExSearch {
public:
    explicit ExSearch(const FreenessOracle& oracle) : oracle_(oracle), m_(oracle.num_edges()) { }

    Mask run()
    {
        expand(0, 0);
        return best_;
    }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Each occurrence lying inside chosen + undecided must lose an undecided edge;
    // occurrences with disjoint undecided parts need distinct losses.
    std::size_t packing(Mask chosen, std::size_t pos) const
    {
        Mask undecided = low_bits(m_) & ~low_bits(pos);
        Mask excluded = low_bits(pos) & ~chosen;
        Mask used = 0;
        std::size_t count = 0;
        for (auto o : oracle_.occurrences()) {
            if (o & excluded)
                continue;
            Mask part = o & undecided;
            if (part && !(part & used)) {
                used |= part;
                ++count;
            }
        }
        return count;
    }

    void expand(std::size_t pos, Mask chosen)
    {
        ++nodes_;
        std::size_t size = popcount(chosen);
        if (size > best_size_) {
            best_ = chosen;
            best_size_ = size;
        }
        if (pos == m_)
            return;
        if (size + (m_ - pos) <= best_size_)
            return;
        if (size + (m_ - pos) - packing(chosen, pos) <= best_size_)
            return;
        auto e = static_cast<EdgeId>(pos);
        if (oracle_.stays_free(chosen, e))
            expand(pos + 1, chosen | bit(e));
        expand(pos + 1, chosen);
    }

    const FreenessOracle& oracle_;
    std::size_t m_;
    Mask best_ = 0;
    std::size_t best_size_ = 0;
    std::uint64_t nodes_ = 0;
};

class AlternatingSearch {
public:
    AlternatingSearch(const FreenessOracle& oracle, const LinearOrdering& sigma, bool strong, std::size_t target)
        : oracle_(oracle), sigma_(sigma), strong_(strong), target_(target), m_(sigma.size()),
          colour_(m_, -1), best_colour_(m_, -1)
    {
    }

    std::size_t run()
    {
        expand(0, 0, 0, true, true, 0, 0);
        return best_;
    }
    const std::vector<int>& best_colouring() const { return best_colour_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void expand(std::size_t pos, Mask red, Mask blue, bool red_free, bool blue_free, int next, std::size_t length)
    {
        ++nodes_;
        if (length > best_) {
            best_ = length;
            best_colour_ = colour_;
        }
        if (best_ >= target_ || pos == m_ || length + (m_ - pos) <= best_)
            return;
        EdgeId e = sigma_.at(pos);
        Mask side = next == 0 ? red : blue;
        bool side_free = next == 0 ? red_free : blue_free;
        bool other_free = next == 0 ? blue_free : red_free;
        bool now_free = side_free && oracle_.stays_free(side, e);
        bool allowed = strong_ ? (now_free || other_free) : now_free;
        if (allowed) {
            colour_[e] = next;
            if (next == 0)
                expand(pos + 1, red | bit(e), blue, now_free, blue_free, 1, length + 1);
            else
                expand(pos + 1, red, blue | bit(e), red_free, now_free, 0, length + 1);
            colour_[e] = -1;
        }
        expand(pos + 1, red, blue, red_free, blue_free, next, length);
    }

    const FreenessOracle& oracle_;
    const LinearOrdering& sigma_;
    bool strong_;
    std::size_t target_;
    std::size_t m_;
    std::vector<int> colour_;
    std::vector<int> best_colour_;
    std::size_t best_ = 0;
    std::uint64_t nodes_ = 0;
};

struct OrderingResult {
    std::size_t value;
    std::vector<std::uint32_t> sequence;
    std::uint64_t nodes = 0;
};

TuranReport evaluate(const FreenessOracle& oracle, const LinearOrdering& sigma, bool strong, BoundMode mode)
{
    AlternatingSearch search(oracle, sigma, strong, sigma.size() + 1);
    TuranReport out;
    out.value = search.run();
    out.mode = mode;
    out.coloring = AlternatingColoring{sigma, search.best_colouring()};
    out.nodes = search.nodes();
    return out;
}

} // namespace

std::string to_string(BoundMode mode)
{
    switch (mode) {
    case BoundMode::exact: return "exact";
    case BoundMode::lower_bound: return "lower-bound";
    case BoundMode::upper_bound: return "upper-bound";
    }
    return "?";
}

BoundMode parse_bound_mode(const std::string& text)
{
    if (text == "exact")
        return BoundMode::exact;
    if (text == "lower-bound")
        return BoundMode::lower_bound;
    if (text == "upper-bound" || text == "heuristic")
        return BoundMode::upper_bound;
    throw InvalidArgument("unknown mode '" + text + "'");
}

std::size_t AlternatingColoring::length() const
{
    return static_cast<std::size_t>(std::count_if(colour.begin(), colour.end(), [](int c) { return c >= 0; }));
}

std::vector<EdgeId> AlternatingColoring::red() const
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < colour.size(); ++e)
        if (colour[e] == 0)
            out.push_back(e);
    return out;
}

std::vector<EdgeId> AlternatingColoring::blue() const
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < colour.size(); ++e)
        if (colour[e] == 1)
            out.push_back(e);
    return out;
}

bool is_alternating(const AlternatingColoring& c)
{
    if (c.ordering.size() != c.colour.size())
        return false;
    int last = -1;
    for (std::size_t j = 0; j < c.ordering.size(); ++j) {
        int colour = c.colour[c.ordering.at(j)];
        if (colour < -1 || colour > 1)
            return false;
        if (colour == -1)
            continue;
        if (colour == last)
            return false;
        last = colour;
    }
    return true;
}

FreenessOracle::FreenessOracle(const Hypergraph& host, const PatternFamily& family, const PatternOptions& options)
    : num_edges_(host.num_edges()), through_(host.num_edges())
{
    check_edges(host, 64, "host edges for the freeness oracle");
    for (const auto& occ : enumerate_occurrences(host, family, options)) {
        Mask m = 0;
        for (auto e : occ.edge_ids)
            m |= bit(e);
        occurrences_.push_back(m);
    }
    std::sort(occurrences_.begin(), occurrences_.end());
    occurrences_.erase(std::unique(occurrences_.begin(), occurrences_.end()), occurrences_.end());
    for (auto o : occurrences_)
        for (std::size_t e = 0; e < num_edges_; ++e)
            if (o & bit(e))
                through_[e].push_back(o);
}

bool FreenessOracle::is_free(std::uint64_t edges) const
{
    return std::none_of(occurrences_.begin(), occurrences_.end(), [&](Mask o) { return (o & edges) == o; });
}

bool FreenessOracle::stays_free(std::uint64_t edges, EdgeId e) const
{
    Mask with = edges | bit(e);
    return std::none_of(through_[e].begin(), through_[e].end(), [&](Mask o) { return (o & with) == o; });
}

std::uint64_t edge_set_mask(std::size_t num_edges, const std::vector<EdgeId>& ids)
{
    if (num_edges > 64)
        throw_cap("host edges for an edge mask", num_edges, 64);
    Mask m = 0;
    for (auto e : ids) {
        if (e >= num_edges)
            throw InvalidArgument("edge id " + std::to_string(e) + " out of range");
        m |= bit(e);
    }
    return m;
}

TuranReport turan_number(const Hypergraph& host, const PatternFamily& family, const TuranOptions& options,
                         bool allow_heuristic)
{
    TuranReport out;
    if (host.num_edges() > options.max_exact_edges) {
        if (!allow_heuristic)
            throw_cap("host edges for exact ex", host.num_edges(), options.max_exact_edges);
        FreenessOracle oracle(host, family, options.patterns);
        Mask chosen = 0;
        for (EdgeId e = 0; e < host.num_edges(); ++e)
            if (oracle.stays_free(chosen, e))
                chosen |= bit(e);
        out.mode = BoundMode::lower_bound;
        out.value = popcount(chosen);
        for_each_bit(chosen, [&](std::uint32_t e) { out.witness.push_back(e); });
        return out;
    }
    FreenessOracle oracle(host, family, options.patterns);
    ExSearch search(oracle);
    Mask best = search.run();
    out.value = popcount(best);
    for_each_bit(best, [&](std::uint32_t e) { out.witness.push_back(e); });
    out.nodes = search.nodes();
    return out;
}

TuranReport ex_alt_sigma(const Hypergraph& host, const PatternFamily& family, const LinearOrdering& sigma,
                         bool strong, const TuranOptions& options)
{
    check_edges(host, options.max_exact_edges, "host edges for ex_alt");
    if (sigma.size() != host.num_edges())
        throw InvalidArgument("ordering has " + std::to_string(sigma.size()) + " entries for " +
                              std::to_string(host.num_edges()) + " hyperedges");
    FreenessOracle oracle(host, family, options.patterns);
    return evaluate(oracle, sigma, strong, BoundMode::exact);
}

TuranReport ex_alt_min(const Hypergraph& host, const PatternFamily& family, bool strong,
                       const OrderingSearch& search, const TuranOptions& options)
{
    std::size_t m = host.num_edges();
    if (search.mode == BoundMode::lower_bound)
        throw InvalidArgument("ex_alt_min supports exact and upper-bound modes");
    if (search.mode == BoundMode::exact)
        check_edges(host, options.max_ordering_edges, "host edges for the exact ordering scan");
    else
        check_edges(host, options.max_exact_edges, "host edges for ex_alt");

    FreenessOracle oracle(host, family, options.patterns);
    ExSearch ex_search(oracle);
    std::size_t ex = popcount(ex_search.run());
    // No ordering goes below this.
    std::size_t floor = strong ? std::min(ex + 1, m) : ex;

    std::vector<std::uint32_t> identity(m);
    std::iota(identity.begin(), identity.end(), 0U);

    std::atomic<std::size_t> best{m + 1};
    std::uint64_t nodes = 0;
    auto try_ordering = [&](const std::vector<std::uint32_t>& seq, OrderingResult& local) {
        LinearOrdering sigma(seq);
        AlternatingSearch s(oracle, sigma, strong, best.load());
        std::size_t value = s.run();
        local.nodes += s.nodes();
        if (value < local.value) {
            local.value = value;
            local.sequence = seq;
        }
        std::size_t current = best.load();
        while (value < current && !best.compare_exchange_weak(current, value)) {
        }
    };

    OrderingResult chosen{m + 1, identity};
    if (search.mode == BoundMode::exact) {
        std::size_t workers = std::max<std::size_t>(1, std::min(search.workers, std::max<std::size_t>(m, 1)));
        std::vector<OrderingResult> results(workers, OrderingResult{m + 1, identity});
        auto work = [&](std::size_t w) {
            for (std::uint32_t first = 0; first < std::max<std::size_t>(m, 1); ++first) {
                if (first % workers != w)
                    continue;
                if (m == 0) {
                    try_ordering(identity, results[w]);
                    return;
                }
                std::vector<std::uint32_t> rest;
                for (std::uint32_t e = 0; e < m; ++e)
                    if (e != first)
                        rest.push_back(e);
                do {
                    if (best.load() <= floor)
                        return;
                    std::vector<std::uint32_t> seq{first};
                    seq.insert(seq.end(), rest.begin(), rest.end());
                    // An ordering and its reversal give the same value.
                    if (m > 1 && seq.front() > seq.back())
                        continue;
                    try_ordering(seq, results[w]);
                } while (std::next_permutation(rest.begin(), rest.end()));
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::jthread> threads;
            for (std::size_t w = 0; w < workers; ++w)
                threads.emplace_back(work, w);
        }
        for (const auto& r : results) {
            nodes += r.nodes;
            if (r.value < chosen.value || (r.value == chosen.value && r.sequence < chosen.sequence))
                chosen = {r.value, r.sequence};
        }
    } else {
        std::vector<std::vector<std::uint32_t>> candidates;
        if (host.is_graph() && m > 0) {
            candidates.push_back(interval_ordering(host, false).sequence());
            candidates.push_back(interval_ordering(host, true).sequence());
        }
        candidates.push_back(identity);
        std::mt19937_64 rng(search.seed);
        for (std::size_t i = 0; i < search.restarts; ++i) {
            auto seq = identity;
            std::shuffle(seq.begin(), seq.end(), rng);
            candidates.push_back(std::move(seq));
        }
        OrderingResult local{m + 1, identity};
        for (const auto& seq : candidates) {
            if (best.load() <= floor)
                break;
            try_ordering(seq, local);
        }
        nodes = local.nodes;
        chosen = {local.value, local.sequence};
    }

    TuranReport out = evaluate(oracle, LinearOrdering(chosen.sequence), strong, search.mode);
    out.nodes += nodes;
    return out;
}

LinearOrdering interval_ordering(const Hypergraph& host, bool singles_last)
{
    if (!host.is_graph())
        throw InvalidArgument("interval ordering needs a 2-uniform multigraph");
    auto classes = parallel_classes(host);
    if (singles_last)
        std::stable_partition(classes.begin(), classes.end(), [](const auto& c) { return c.size() > 1; });
    std::vector<std::uint32_t> seq;
    for (const auto& c : classes)
        seq.insert(seq.end(), c.begin(), c.end());
    return LinearOrdering(std::move(seq));
}

bool is_family_free(const Hypergraph& host, const std::vector<EdgeId>& edges, const PatternFamily& family)
{
    std::vector<std::vector<VertexId>> selected;
    for (auto e : edges)
        selected.push_back(host.edge(e));
    return enumerate_occurrences(Hypergraph(host.num_vertices(), std::move(selected)), family).empty();
}

bool validate_turan_witness(const Hypergraph& host, const PatternFamily& family, const TuranReport& report)
{
    auto ids = report.witness;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        return false;
    if (!ids.empty() && ids.back() >= host.num_edges())
        return false;
    return ids.size() == report.value && is_family_free(host, ids, family);
}

bool validate_alternating_witness(const Hypergraph& host, const PatternFamily& family, const TuranReport& report,
                                  bool strong)
{
    if (!report.coloring)
        return false;
    const auto& c = *report.coloring;
    if (c.ordering.size() != host.num_edges() || !is_alternating(c) || c.length() != report.value)
        return false;
    bool red_free = is_family_free(host, c.red(), family);
    bool blue_free = is_family_free(host, c.blue(), family);
    return strong ? (red_free || blue_free) : (red_free && blue_free);
}

} // namespace kgturan
