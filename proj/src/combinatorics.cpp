#include "sgp/combinatorics.hpp"

#include <cstdint>
#include <limits>

namespace sgp {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    constexpr auto cap = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) {
            return cap;
        }
    }
    return static_cast<std::size_t>(acc);
}

}  // namespace sgp
