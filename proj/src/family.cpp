#include "sgp/family.hpp"

#include <algorithm>
#include <string>

#include "sgp/errors.hpp"

namespace sgp {

IndexSet::IndexSet(std::initializer_list<std::size_t> indices)
    : IndexSet(from_indices(std::vector<std::size_t>(indices))) {}

IndexSet IndexSet::from_indices(const std::vector<std::size_t>& indices) {
    std::uint64_t mask = 0;
    for (std::size_t i : indices) {
        if (i >= kMaxIndexedPoints) {
            throw DomainError("point index " + std::to_string(i) + " exceeds the 64-point limit");
        }
        mask |= std::uint64_t{1} << i;
    }
    return IndexSet(mask);
}

IndexSet IndexSet::first(std::size_t n) {
    if (n > kMaxIndexedPoints) {
        throw DomainError("index sets hold at most 64 points");
    }
    return IndexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<std::size_t> IndexSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
}

SubsetFamily::SubsetFamily(std::vector<IndexSet> blocks) : blocks_(std::move(blocks)) {
    IndexSet seen;
    for (IndexSet b : blocks_) {
        if (b.empty()) {
            throw DomainError("family blocks must be nonempty");
        }
        if (!b.disjoint(seen)) {
            throw DomainError("family blocks must be pairwise disjoint");
        }
        seen = seen | b;
    }
    std::sort(blocks_.begin(), blocks_.end(), [](IndexSet a, IndexSet b) { return a.min() < b.min(); });
}

SubsetFamily SubsetFamily::from_labels(const std::vector<std::vector<std::size_t>>& labels) {
    std::vector<IndexSet> blocks;
    blocks.reserve(labels.size());
    for (const auto& block : labels) {
        std::vector<std::size_t> zero_based;
        for (std::size_t label : block) {
            if (label == 0) {
                throw DomainError("point labels are 1-based");
            }
            zero_based.push_back(label - 1);
        }
        IndexSet set = IndexSet::from_indices(zero_based);
        if (set.size() != block.size()) {
            throw DomainError("repeated label inside a block");
        }
        blocks.push_back(set);
    }
    return SubsetFamily(std::move(blocks));
}

std::vector<std::vector<std::size_t>> SubsetFamily::labels() const {
    std::vector<std::vector<std::size_t>> out;
    for (IndexSet b : blocks_) {
        auto idx = b.indices();
        for (auto& i : idx) {
            ++i;
        }
        out.push_back(std::move(idx));
    }
    return out;
}

std::size_t SubsetFamily::total_size() const noexcept {
    return support().size();
}

IndexSet SubsetFamily::support() const noexcept {
    IndexSet u;
    for (IndexSet b : blocks_) {
        u = u | b;
    }
    return u;
}

std::vector<long> SubsetFamily::deficiencies(std::size_t d) const {
    std::vector<long> eps;
    eps.reserve(blocks_.size());
    for (IndexSet b : blocks_) {
        eps.push_back(static_cast<long>(d + 1) - static_cast<long>(b.size()));
    }
    return eps;
}

long SubsetFamily::deficiency_sum(std::size_t d) const {
    long s = 0;
    for (long e : deficiencies(d)) {
        s += e;
    }
    return s;
}

std::strong_ordering operator<=>(const SubsetFamily& a, const SubsetFamily& b) {
    if (auto c = a.r() <=> b.r(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(),
                                                  b.blocks_.end());
}

}  // namespace sgp
