#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "sgp/family.hpp"
#include "sgp/matrix.hpp"
#include "sgp/rational.hpp"

namespace sgp {

/// n >= 1 points of R^d with exact coordinates. Labels are the positions
/// 1..n; internally points are addressed 0-based.
class PointSet {
public:
    PointSet(std::size_t dim, std::vector<Vector> points);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Vector& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Vector>& points() const noexcept { return points_; }
    IndexSet all() const { return IndexSet::first(size()); }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dim_;
    std::vector<Vector> points_;
};

/// A nonempty flat {x : normals x = rhs} with linearly independent rows;
/// normals.rows() is the codimension.
struct FlatConstraints {
    Matrix normals;
    Vector rhs;
    std::size_t ambient_dim = 0;

    std::size_t codim() const noexcept { return normals.rows(); }
    std::size_t dim() const noexcept { return ambient_dim - codim(); }
    /// normals x - rhs
    Vector residual(const Vector& x) const;
    bool contains(const Vector& x) const;
};

/// Dimension of aff{p_i : i in subset}. Throws DomainError on an empty or
/// out-of-range subset.
std::size_t affine_dim(const PointSet& points, IndexSet subset);

bool affinely_independent(const PointSet& points, IndexSet subset);

FlatConstraints hull_constraints(const PointSet& points, IndexSet subset);

/// Dimension of the intersection of the given flats, -1 when empty.
int intersection_dim(const std::vector<const FlatConstraints*>& flats, std::size_t ambient_dim);

/// Dimension of the intersection of aff F_v over the blocks of the family,
/// -1 when empty.
int intersection_dim(const PointSet& points, const SubsetFamily& family);

/// Memoizes hull constraints per subset of one point set. Not thread-safe;
/// give each worker its own cache.
class HullCache {
public:
    explicit HullCache(const PointSet& points) : points_(&points) {}

    const FlatConstraints& constraints(IndexSet subset);
    std::size_t affine_dim(IndexSet subset) { return constraints(subset).dim(); }
    int intersection_dim(const SubsetFamily& family);

private:
    const PointSet* points_;
    std::unordered_map<std::uint64_t, FlatConstraints> cache_;
};

struct GeneralPositionResult {
    bool in_general_position = true;
    /// Minimal affinely dependent subset (0-based, ascending) when not in
    /// general position.
    std::vector<std::size_t> witness;

    explicit operator bool() const noexcept { return in_general_position; }
};

/// Every subset of at most d + 1 points is affinely independent. For n > d + 1
/// only the (d + 1)-subsets are examined; repeated points count as a failure.
/// The witness is the lexicographically first dependent (d + 1)-subset (or the
/// whole set when n <= d + 1), shrunk to a minimal dependent subset by
/// dropping points in index order.
GeneralPositionResult is_general_position(const PointSet& points);

}  // namespace sgp
