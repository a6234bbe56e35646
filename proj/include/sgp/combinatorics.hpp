#pragma once

#include <cstddef>
#include <vector>

namespace sgp {

/// Calls fn(const std::vector<std::size_t>&) for every k-subset of
/// {0, ..., n-1} in lexicographic order. Stops early when fn returns false.
/// Returns false iff stopped early.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) {
        return true;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) {
            return false;
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return true;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// C(n, k), saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace sgp
