#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kgturan {

/// Fixed-width 128-bit vertex set. Every exact search in the library runs on
/// these; hypergraphs with more than kCapacity vertices cannot be searched.
class VertexSet {
public:
    static constexpr std::size_t kCapacity = 128;

    constexpr VertexSet() = default;

    static VertexSet of(const std::vector<std::uint32_t>& members)
    {
        VertexSet s;
        for (auto v : members)
            s.set(v);
        return s;
    }

    constexpr void set(std::size_t v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void reset(std::size_t v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    constexpr bool test(std::size_t v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }

    constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }
    constexpr std::size_t count() const
    {
        return static_cast<std::size_t>(std::popcount(w_[0]) + std::popcount(w_[1]));
    }

    constexpr bool intersects(const VertexSet& o) const
    {
        return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
    }
    constexpr bool subset_of(const VertexSet& o) const
    {
        return ((w_[0] & ~o.w_[0]) | (w_[1] & ~o.w_[1])) == 0;
    }

    constexpr VertexSet operator&(const VertexSet& o) const { return {w_[0] & o.w_[0], w_[1] & o.w_[1]}; }
    constexpr VertexSet operator|(const VertexSet& o) const { return {w_[0] | o.w_[0], w_[1] | o.w_[1]}; }
    constexpr VertexSet minus(const VertexSet& o) const { return {w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]}; }
    constexpr VertexSet& operator|=(const VertexSet& o)
    {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }

    /// Lowest member; undefined when empty.
    constexpr std::size_t first() const
    {
        return w_[0] ? static_cast<std::size_t>(std::countr_zero(w_[0]))
                     : 64 + static_cast<std::size_t>(std::countr_zero(w_[1]));
    }

    std::vector<std::uint32_t> members() const
    {
        std::vector<std::uint32_t> out;
        for (int i = 0; i < 2; ++i)
            for (auto w = w_[i]; w; w &= w - 1)
                out.push_back(static_cast<std::uint32_t>(64 * i + std::countr_zero(w)));
        return out;
    }

    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} { }
    std::uint64_t w_[2] = {0, 0};
};

/// Iterate the members of a 64-bit mask, lowest first.
template <typename F>
inline void for_each_bit(std::uint64_t mask, F&& f)
{
    for (; mask; mask &= mask - 1)
        f(static_cast<std::uint32_t>(std::countr_zero(mask)));
}

} // namespace kgturan
