#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kgturan {

/// An element of {-1, 0, +1}^n other than the zero vector. Equivalent to the
/// signed pair (X+, X-) of disjoint position sets.
class SignVector {
public:
    /// Throws InvalidArgument on an entry outside {-1,0,+1} or the all-zero vector.
    explicit SignVector(std::vector<int> entries);
    /// Builds from disjoint position sets over [0, n).
    static SignVector from_pair(std::size_t n, std::span<const std::uint32_t> plus,
                                std::span<const std::uint32_t> minus);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    std::vector<std::uint32_t> plus() const;
    std::vector<std::uint32_t> minus() const;
    std::size_t nonzero_count() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;

private:
    std::vector<int> entries_;
};

/// Length of a longest alternating subsequence of nonzero entries, which is the
/// number of maximal runs of equal sign once zeros are dropped.
std::size_t alt(const SignVector& x);
/// Same quantity on a raw sequence; returns 0 for an all-zero sequence.
std::size_t alt_of_sequence(std::span<const int> entries);

/// A permutation of a ground set {0..n-1}: sequence()[j] is the element at position j.
class LinearOrdering {
public:
    LinearOrdering() = default;
    /// Throws InvalidArgument unless `sequence` is a permutation of 0..n-1.
    explicit LinearOrdering(std::vector<std::uint32_t> sequence);
    static LinearOrdering identity(std::size_t n);

    std::size_t size() const { return seq_.size(); }
    std::uint32_t at(std::size_t position) const { return seq_[position]; }
    std::size_t position_of(std::uint32_t element) const { return pos_[element]; }
    const std::vector<std::uint32_t>& sequence() const { return seq_; }

    LinearOrdering inverse() const;
    /// Relabels the ground set: element e becomes relabel(e).
    LinearOrdering relabeled(const LinearOrdering& relabel) const;

    friend bool operator==(const LinearOrdering& a, const LinearOrdering& b) { return a.seq_ == b.seq_; }

private:
    std::vector<std::uint32_t> seq_;
    std::vector<std::uint32_t> pos_;
};

struct SignedPair {
    std::vector<std::uint32_t> plus;
    std::vector<std::uint32_t> minus;
    friend bool operator==(const SignedPair&, const SignedPair&) = default;
};

/// (X+_sigma, X-_sigma): the element placed at position j joins the side of x_j.
/// Both lists are sorted ascending. Throws InvalidArgument on a length mismatch.
SignedPair apply_ordering(const SignVector& x, const LinearOrdering& sigma);

} // namespace kgturan
