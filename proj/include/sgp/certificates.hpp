#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgp/family.hpp"
#include "sgp/geometry.hpp"
#include "sgp/matrix.hpp"

namespace sgp {

/// (d+1) x |subset| matrix whose k-th column is (1, x_k)^t, in subset order.
Matrix bordered_matrix(const PointSet& points, const std::vector<std::size_t>& subset);

/// General-position certificate, nonzero iff the points are in general position:
///   n == d + 1: det M
///   n >  d + 1: product of all (d+1) x (d+1) minors of M
///   n <  d + 1: sum of squares of all n x n minors of M
Rational gp_polynomial(const PointSet& points);

/// Linear system equating affine combinations over consecutive blocks.
///
/// Columns follow `column_order` (blocks in canonical order, ascending point
/// index inside a block). Row 0 is the normalization sum of the F_1
/// coefficients = 1. Then, for v = 1..r-1, a band of d + 1 rows holding
/// +(1, x_i) for i in F_v and -(1, x_i) for i in F_{v+1}.
struct ConditionMatrices {
    Matrix a;        // T(d,r) x m
    Matrix a_plus;   // a with the column (1, 0, ..., 0)^t appended
    Matrix a_minus;  // a without the normalization row
    std::vector<std::size_t> column_order;

    std::size_t p() const noexcept { return a.rows(); }
    std::size_t q() const noexcept { return a.cols(); }
};

/// Throws DomainError when a block has more than d points.
ConditionMatrices assemble(const PointSet& points, const SubsetFamily& family);

struct Case1Certificate {
    Rational value;               // det A
    std::optional<Vector> point;  // the common point, when det A != 0
    Vector coefficients;          // solution of A x = e_1, when det A != 0
};

/// Requires sum of deficiencies == d (A square of order T(d,r)).
Case1Certificate case1_certificate(const PointSet& points, const SubsetFamily& family);

/// sum of coefficient_i * x_i over the given block, coefficients indexed as
/// the columns of assemble().
Vector affine_combination(const PointSet& points, const SubsetFamily& family, const Vector& coefficients,
                          std::size_t block);

inline constexpr std::size_t kDefaultMinorLimit = 20000;

struct Case2Certificate {
    /// Sum of squares of all q x q minors of A-; empty when there are more than
    /// the configured number of minors. Only its vanishing matters, and
    /// rank_a_minus decides that exactly.
    std::optional<Rational> value;
    std::size_t rank_a_minus = 0;
    std::size_t q = 0;

    bool full_column_rank() const noexcept { return rank_a_minus == q; }
};

/// Requires sum of deficiencies >= d + 1 (m < T(d,r)).
Case2Certificate case2_certificate(const PointSet& points, const SubsetFamily& family,
                                   std::size_t minor_limit = kDefaultMinorLimit);

struct WitnessConfiguration {
    PointSet points;
    SubsetFamily family;
};

/// Points whose blocks span the coordinate subspaces W_v = {x : x_i = 0 for i in
/// the v-th window of the composition}; the hulls meet exactly at the origin.
/// `deficiencies` must be a composition of d into positive parts.
WitnessConfiguration witness_case1(std::size_t d, const std::vector<std::size_t>& deficiencies);

/// Substitutes u_1..u_d = e_1..e_d and u_0 = -(e_1 + ... + e_d): block v takes
/// U minus E_v, with the E_v assigned cyclically so they cover U. A- then has
/// full column rank. Requires 1 <= eps_v <= d and sum >= d + 1. Points may repeat.
WitnessConfiguration witness_case2(std::size_t d, const std::vector<std::size_t>& deficiencies);

}  // namespace sgp
