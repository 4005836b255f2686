#include "kgturan/sign_vector.hpp"

#include "kgturan/errors.hpp"

#include <algorithm>
#include <numeric>

namespace kgturan {

SignVector::SignVector(std::vector<int> entries) : entries_(std::move(entries))
{
    bool nonzero = false;
    for (int e : entries_) {
        if (e < -1 || e > 1)
            throw InvalidArgument("sign vector entry " + std::to_string(e) + " not in {-1,0,+1}");
        nonzero = nonzero || e != 0;
    }
    if (!nonzero)
        throw InvalidArgument("sign vector must not be all-zero");
}

SignVector SignVector::from_pair(std::size_t n, std::span<const std::uint32_t> plus,
                                 std::span<const std::uint32_t> minus)
{
    std::vector<int> entries(n, 0);
    for (auto i : plus) {
        if (i >= n)
            throw InvalidArgument("signed pair position out of range");
        entries[i] = 1;
    }
    for (auto i : minus) {
        if (i >= n)
            throw InvalidArgument("signed pair position out of range");
        if (entries[i] != 0)
            throw InvalidArgument("signed pair sides intersect at " + std::to_string(i));
        entries[i] = -1;
    }
    return SignVector(std::move(entries));
}

std::vector<std::uint32_t> SignVector::plus() const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] == 1)
            out.push_back(i);
    return out;
}

std::vector<std::uint32_t> SignVector::minus() const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] == -1)
            out.push_back(i);
    return out;
}

std::size_t SignVector::nonzero_count() const
{
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](int e) { return e != 0; }));
}

std::size_t alt_of_sequence(std::span<const int> entries)
{
    std::size_t runs = 0;
    int last = 0;
    for (int e : entries) {
        if (e == 0 || e == last)
            continue;
        ++runs;
        last = e;
    }
    return runs;
}

std::size_t alt(const SignVector& x) { return alt_of_sequence(x.entries()); }

LinearOrdering::LinearOrdering(std::vector<std::uint32_t> sequence) : seq_(std::move(sequence))
{
    pos_.assign(seq_.size(), static_cast<std::uint32_t>(seq_.size()));
    for (std::uint32_t j = 0; j < seq_.size(); ++j) {
        auto e = seq_[j];
        if (e >= seq_.size() || pos_[e] != seq_.size())
            throw InvalidArgument("ordering is not a permutation of 0.." + std::to_string(seq_.size() - 1));
        pos_[e] = j;
    }
}

LinearOrdering LinearOrdering::identity(std::size_t n)
{
    std::vector<std::uint32_t> seq(n);
    std::iota(seq.begin(), seq.end(), 0U);
    return LinearOrdering(std::move(seq));
}

LinearOrdering LinearOrdering::inverse() const { return LinearOrdering(pos_); }

LinearOrdering LinearOrdering::relabeled(const LinearOrdering& relabel) const
{
    if (relabel.size() != size())
        throw InvalidArgument("relabeling size mismatch");
    std::vector<std::uint32_t> seq(seq_.size());
    for (std::size_t j = 0; j < seq_.size(); ++j)
        seq[j] = relabel.at(seq_[j]);
    return LinearOrdering(std::move(seq));
}

SignedPair apply_ordering(const SignVector& x, const LinearOrdering& sigma)
{
    if (x.size() != sigma.size())
        throw InvalidArgument("sign vector length " + std::to_string(x.size()) + " does not match ordering size " +
                              std::to_string(sigma.size()));
    SignedPair out;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] == 1)
            out.plus.push_back(sigma.at(j));
        else if (x[j] == -1)
            out.minus.push_back(sigma.at(j));
    }
    std::sort(out.plus.begin(), out.plus.end());
    std::sort(out.minus.begin(), out.minus.end());
    return out;
}

} // namespace kgturan
