#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgp/geometry.hpp"

namespace sgp {

/// (t, t^2, ..., t^d) for each parameter, in order. Throws DomainError on a
/// repeated parameter.
PointSet gen_moment_curve(std::size_t d, const std::vector<Rational>& params);

/// (1,0), (0,1), (-1,1), (-1,0), (0,-1), (1,-1): an affine image of the regular
/// hexagon. In general position, but the three main diagonals meet at the origin.
PointSet gen_hexagon_counterexample();

/// Coordinates p/q with |p| <= denom_bound^2 and 1 <= q <= denom_bound, drawn
/// from a 64-bit Mersenne Twister seeded with `seed`.
PointSet gen_random_rational(std::size_t d, std::size_t n, std::uint64_t seed, std::uint64_t denom_bound);

}  // namespace sgp
