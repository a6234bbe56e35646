#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sgp {

/// Points are addressed by 0-based index; a set of them is a 64-bit mask.
/// Families therefore live on point sets of at most 64 points.
inline constexpr std::size_t kMaxIndexedPoints = 64;

class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint64_t mask) : mask_(mask) {}
    IndexSet(std::initializer_list<std::size_t> indices);
    static IndexSet from_indices(const std::vector<std::size_t>& indices);
    /// {0, ..., n-1}
    static IndexSet first(std::size_t n);

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr bool contains(std::size_t i) const noexcept { return i < 64 && ((mask_ >> i) & 1U) != 0; }
    /// Smallest member; undefined on the empty set.
    constexpr std::size_t min() const noexcept { return static_cast<std::size_t>(std::countr_zero(mask_)); }
    constexpr bool disjoint(IndexSet other) const noexcept { return (mask_ & other.mask_) == 0; }

    constexpr IndexSet operator|(IndexSet o) const noexcept { return IndexSet(mask_ | o.mask_); }
    constexpr IndexSet operator&(IndexSet o) const noexcept { return IndexSet(mask_ & o.mask_); }

    /// Members in ascending order.
    std::vector<std::size_t> indices() const;

    friend constexpr bool operator==(IndexSet, IndexSet) = default;
    friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.mask_ <=> b.mask_; }

private:
    std::uint64_t mask_ = 0;
};

/// Unordered collection of pairwise disjoint, nonempty index blocks, stored
/// in canonical order: block minima strictly increase.
class SubsetFamily {
public:
    SubsetFamily() = default;
    /// Validates disjointness and non-emptiness, then sorts into canonical order.
    explicit SubsetFamily(std::vector<IndexSet> blocks);

    /// Blocks given as lists of 1-based point labels.
    static SubsetFamily from_labels(const std::vector<std::vector<std::size_t>>& labels);
    std::vector<std::vector<std::size_t>> labels() const;

    const std::vector<IndexSet>& blocks() const noexcept { return blocks_; }
    std::size_t r() const noexcept { return blocks_.size(); }
    /// m, the total number of points in the family.
    std::size_t total_size() const noexcept;
    IndexSet support() const noexcept;
    /// d + 1 - |F_v| for each block. Can be negative for oversized blocks.
    std::vector<long> deficiencies(std::size_t d) const;
    long deficiency_sum(std::size_t d) const;

    /// Canonical enumeration order: number of blocks first, then the block
    /// masks compared lexicographically.
    friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
    friend std::strong_ordering operator<=>(const SubsetFamily& a, const SubsetFamily& b);

private:
    std::vector<IndexSet> blocks_;
};

/// (d + 1)(r - 1) + 1
constexpr std::size_t tverberg_number(std::size_t d, std::size_t r) noexcept {
    return (d + 1) * (r - 1) + 1;
}

}  // namespace sgp
