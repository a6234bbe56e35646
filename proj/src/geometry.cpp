#include "sgp/geometry.hpp"

#include <string>

#include "sgp/combinatorics.hpp"
#include "sgp/errors.hpp"

namespace sgp {

PointSet::PointSet(std::size_t dim, std::vector<Vector> points) : dim_(dim), points_(std::move(points)) {
    if (dim_ == 0) {
        throw DimensionError("ambient dimension must be at least 1");
    }
    if (points_.empty()) {
        throw DomainError("a point set needs at least one point");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != dim_) {
            throw DimensionError("point " + std::to_string(i + 1) + " has " + std::to_string(points_[i].size()) +
                                 " coordinates, expected " + std::to_string(dim_));
        }
    }
}

Vector FlatConstraints::residual(const Vector& x) const {
    Vector out = normals * x;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= rhs[i];
    }
    return out;
}

bool FlatConstraints::contains(const Vector& x) const {
    for (const auto& v : residual(x)) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

namespace {

void validate_subset(const PointSet& points, IndexSet subset) {
    if (subset.empty()) {
        throw DomainError("affine hull of the empty set");
    }
    if (points.size() < kMaxIndexedPoints && (subset.mask() >> points.size()) != 0) {
        throw DomainError("subset refers to a point beyond the point set");
    }
}

// Rows p_i - p_base for the remaining members of the subset.
Matrix difference_matrix(const PointSet& points, IndexSet subset) {
    auto idx = subset.indices();
    const Vector& base = points[idx.front()];
    Matrix diff(idx.size() - 1, points.dim());
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const Vector& p = points[idx[k]];
        for (std::size_t c = 0; c < points.dim(); ++c) {
            diff(k - 1, c) = p[c] - base[c];
        }
    }
    return diff;
}

}  // namespace

std::size_t affine_dim(const PointSet& points, IndexSet subset) {
    validate_subset(points, subset);
    return rank(difference_matrix(points, subset));
}

bool affinely_independent(const PointSet& points, IndexSet subset) {
    return affine_dim(points, subset) + 1 == subset.size();
}

FlatConstraints hull_constraints(const PointSet& points, IndexSet subset) {
    validate_subset(points, subset);
    const std::size_t d = points.dim();
    const Vector& base = points[subset.min()];
    std::vector<Vector> normals = nullspace(difference_matrix(points, subset));
    FlatConstraints flat;
    flat.ambient_dim = d;
    flat.normals = Matrix::from_rows(normals, d);
    flat.rhs.reserve(normals.size());
    for (const auto& n : normals) {
        flat.rhs.push_back(dot(n, base));
    }
    return flat;
}

int intersection_dim(const std::vector<const FlatConstraints*>& flats, std::size_t ambient_dim) {
    std::size_t total = 0;
    for (const auto* f : flats) {
        total += f->codim();
    }
    Matrix stacked(total, ambient_dim);
    Vector rhs;
    rhs.reserve(total);
    std::size_t row = 0;
    for (const auto* f : flats) {
        for (std::size_t r = 0; r < f->codim(); ++r, ++row) {
            for (std::size_t c = 0; c < ambient_dim; ++c) {
                stacked(row, c) = f->normals(r, c);
            }
            rhs.push_back(f->rhs[r]);
        }
    }
    ConsistencyReport rep = rank_and_consistency(stacked, rhs);
    if (!rep.consistent) {
        return -1;
    }
    return static_cast<int>(ambient_dim) - static_cast<int>(rep.rank);
}

int intersection_dim(const PointSet& points, const SubsetFamily& family) {
    HullCache cache(points);
    return cache.intersection_dim(family);
}

const FlatConstraints& HullCache::constraints(IndexSet subset) {
    auto it = cache_.find(subset.mask());
    if (it == cache_.end()) {
        it = cache_.emplace(subset.mask(), hull_constraints(*points_, subset)).first;
    }
    return it->second;
}

int HullCache::intersection_dim(const SubsetFamily& family) {
    if (family.r() == 0) {
        throw DomainError("intersection over an empty family");
    }
    std::vector<const FlatConstraints*> flats;
    flats.reserve(family.r());
    for (IndexSet b : family.blocks()) {
        flats.push_back(&constraints(b));
    }
    return sgp::intersection_dim(flats, points_->dim());
}

GeneralPositionResult is_general_position(const PointSet& points) {
    const std::size_t n = points.size();
    const std::size_t d = points.dim();
    if (n > kMaxIndexedPoints) {
        throw DomainError("general-position check supports at most 64 points");
    }
    std::vector<std::size_t> dependent;
    if (n <= d + 1) {
        if (!affinely_independent(points, points.all())) {
            dependent = points.all().indices();
        }
    } else {
        for_each_combination(n, d + 1, [&](const std::vector<std::size_t>& combo) {
            if (affinely_independent(points, IndexSet::from_indices(combo))) {
                return true;
            }
            dependent = combo;
            return false;
        });
    }
    GeneralPositionResult result;
    if (dependent.empty()) {
        return result;
    }
    result.in_general_position = false;
    IndexSet current = IndexSet::from_indices(dependent);
    for (std::size_t i : dependent) {
        IndexSet smaller(current.mask() & ~(std::uint64_t{1} << i));
        if (!affinely_independent(points, smaller)) {
            current = smaller;
        }
    }
    result.witness = current.indices();
    return result;
}

}  // namespace sgp
