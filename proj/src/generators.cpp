#include "sgp/generators.hpp"

#include <random>
#include <set>

#include "sgp/errors.hpp"

namespace sgp {

PointSet gen_moment_curve(std::size_t d, const std::vector<Rational>& params) {
    std::set<Rational> seen;
    std::vector<Vector> pts;
    for (const auto& t : params) {
        if (!seen.insert(t).second) {
            throw DomainError("moment curve parameters must be distinct");
        }
        Vector p(d);
        Rational power = t;
        for (std::size_t k = 0; k < d; ++k) {
            p[k] = power;
            power *= t;
        }
        pts.push_back(std::move(p));
    }
    return PointSet(d, std::move(pts));
}

PointSet gen_hexagon_counterexample() {
    return PointSet(2, {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
}

namespace {

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

PointSet gen_random_rational(std::size_t d, std::size_t n, std::uint64_t seed, std::uint64_t denom_bound) {
    if (denom_bound < 1 || denom_bound > (std::uint64_t{1} << 30)) {
        throw DomainError("denominator bound must lie in [1, 2^30]");
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t span = denom_bound * denom_bound;
    std::vector<Vector> pts(n, Vector(d));
    for (auto& p : pts) {
        for (auto& x : p) {
            const auto num = static_cast<long long>(uniform_below(rng, 2 * span + 1)) - static_cast<long long>(span);
            const auto den = static_cast<long long>(uniform_below(rng, denom_bound)) + 1;
            x = Rational(Integer(std::to_string(num)), Integer(std::to_string(den)));
            x.canonicalize();
        }
    }
    return PointSet(d, std::move(pts));
}

}  // namespace sgp
