#include "sgp/certificates.hpp"

#include <numeric>
#include <string>

#include "sgp/combinatorics.hpp"
#include "sgp/errors.hpp"

namespace sgp {

Matrix bordered_matrix(const PointSet& points, const std::vector<std::size_t>& subset) {
    const std::size_t d = points.dim();
    Matrix m(d + 1, subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (subset[k] >= points.size()) {
            throw DomainError("point index out of range");
        }
        const Vector& x = points[subset[k]];
        m(0, k) = 1;
        for (std::size_t c = 0; c < d; ++c) {
            m(c + 1, k) = x[c];
        }
    }
    return m;
}

Rational gp_polynomial(const PointSet& points) {
    const std::size_t n = points.size();
    const std::size_t d = points.dim();
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const Matrix m = bordered_matrix(points, all);
    if (n == d + 1) {
        return det(m);
    }
    if (n > d + 1) {
        Rational product = 1;
        for_each_combination(n, d + 1, [&](const std::vector<std::size_t>& cols) {
            product *= det(m.select_cols(cols));
            return product != 0;
        });
        return product;
    }
    Rational sum = 0;
    for_each_combination(d + 1, n, [&](const std::vector<std::size_t>& rows) {
        Rational minor = det(m.select_rows(rows));
        sum += minor * minor;
        return true;
    });
    return sum;
}

ConditionMatrices assemble(const PointSet& points, const SubsetFamily& family) {
    const std::size_t d = points.dim();
    const std::size_t r = family.r();
    if (r == 0) {
        throw DomainError("cannot assemble an empty family");
    }
    ConditionMatrices out;
    std::vector<std::size_t> block_start;
    for (IndexSet b : family.blocks()) {
        if (b.size() > d) {
            throw DomainError("block of " + std::to_string(b.size()) + " points exceeds d = " + std::to_string(d));
        }
        block_start.push_back(out.column_order.size());
        for (std::size_t i : b.indices()) {
            if (i >= points.size()) {
                throw DomainError("family refers to a point beyond the point set");
            }
            out.column_order.push_back(i);
        }
    }
    block_start.push_back(out.column_order.size());

    out.a = Matrix(tverberg_number(d, r), out.column_order.size());
    for (std::size_t col = block_start[0]; col < block_start[1]; ++col) {
        out.a(0, col) = 1;
    }
    for (std::size_t v = 0; v + 1 < r; ++v) {
        const std::size_t band = 1 + v * (d + 1);
        auto fill = [&](std::size_t block, int sign) {
            for (std::size_t col = block_start[block]; col < block_start[block + 1]; ++col) {
                const Vector& x = points[out.column_order[col]];
                out.a(band, col) = sign;
                for (std::size_t c = 0; c < d; ++c) {
                    out.a(band + 1 + c, col) = sign > 0 ? x[c] : Rational(-x[c]);
                }
            }
        };
        fill(v, +1);
        fill(v + 1, -1);
    }
    Vector e1(out.a.rows(), Rational(0));
    e1[0] = 1;
    out.a_plus = out.a.with_column(e1);
    out.a_minus = out.a.without_row(0);
    return out;
}

Vector affine_combination(const PointSet& points, const SubsetFamily& family, const Vector& coefficients,
                          std::size_t block) {
    if (block >= family.r()) {
        throw DomainError("block index out of range");
    }
    std::size_t col = 0;
    for (std::size_t v = 0; v < block; ++v) {
        col += family.blocks()[v].size();
    }
    Vector z(points.dim(), Rational(0));
    for (std::size_t i : family.blocks()[block].indices()) {
        for (std::size_t c = 0; c < points.dim(); ++c) {
            z[c] += coefficients.at(col) * points[i][c];
        }
        ++col;
    }
    return z;
}

Case1Certificate case1_certificate(const PointSet& points, const SubsetFamily& family) {
    if (family.deficiency_sum(points.dim()) != static_cast<long>(points.dim())) {
        throw DomainError("case I certificate needs deficiencies summing to d");
    }
    ConditionMatrices mats = assemble(points, family);
    Case1Certificate cert;
    cert.value = det(mats.a);
    if (cert.value != 0) {
        Vector e1(mats.p(), Rational(0));
        e1[0] = 1;
        auto sol = solve_affine(mats.a, e1);
        cert.coefficients = std::move(sol->particular);
        cert.point = affine_combination(points, family, cert.coefficients, 0);
    }
    return cert;
}

Case2Certificate case2_certificate(const PointSet& points, const SubsetFamily& family, std::size_t minor_limit) {
    if (family.deficiency_sum(points.dim()) <= static_cast<long>(points.dim())) {
        throw DomainError("case II certificate needs deficiencies summing to more than d");
    }
    ConditionMatrices mats = assemble(points, family);
    const Matrix& am = mats.a_minus;
    Case2Certificate cert;
    cert.q = mats.q();
    cert.rank_a_minus = rank(am);
    if (binomial(am.rows(), cert.q) <= minor_limit) {
        Rational sum = 0;
        for_each_combination(am.rows(), cert.q, [&](const std::vector<std::size_t>& rows) {
            Rational minor = det(am.select_rows(rows));
            sum += minor * minor;
            return true;
        });
        cert.value = sum;
    }
    return cert;
}

namespace {

void validate_composition(std::size_t d, const std::vector<std::size_t>& eps) {
    if (eps.empty()) {
        throw DomainError("empty deficiency list");
    }
    for (std::size_t e : eps) {
        if (e < 1 || e > d) {
            throw DomainError("deficiencies must lie in [1, d]");
        }
    }
}

WitnessConfiguration from_blocks(std::size_t d, const std::vector<std::vector<Vector>>& blocks) {
    std::vector<Vector> pts;
    std::vector<IndexSet> family;
    for (const auto& block : blocks) {
        std::vector<std::size_t> idx;
        for (const auto& p : block) {
            idx.push_back(pts.size());
            pts.push_back(p);
        }
        family.push_back(IndexSet::from_indices(idx));
    }
    return {PointSet(d, std::move(pts)), SubsetFamily(std::move(family))};
}

}  // namespace

WitnessConfiguration witness_case1(std::size_t d, const std::vector<std::size_t>& deficiencies) {
    validate_composition(d, deficiencies);
    if (std::accumulate(deficiencies.begin(), deficiencies.end(), std::size_t{0}) != d) {
        throw DomainError("case I witness needs deficiencies summing to d");
    }
    std::vector<std::vector<Vector>> blocks;
    std::size_t window_start = 0;
    for (std::size_t v = 0; v < deficiencies.size(); ++v) {
        const std::size_t window_end = window_start + deficiencies[v];
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < d; ++c) {
            if (c < window_start || c >= window_end) {
                free.push_back(c);
            }
        }
        // Scalars offset + 1 .. offset + k + 1 on the free axes, the last one
        // reusing the first axis. Offsets keep blocks apart as point sets.
        const std::size_t offset = v * (d + 1);
        std::vector<Vector> block;
        if (free.empty()) {
            block.emplace_back(d, Rational(0));
        }
        for (std::size_t t = 0; t < free.size(); ++t) {
            Vector p(d, Rational(0));
            p[free[t]] = static_cast<long>(offset + t + 1);
            block.push_back(std::move(p));
        }
        if (!free.empty()) {
            Vector p(d, Rational(0));
            p[free[0]] = static_cast<long>(offset + free.size() + 1);
            block.push_back(std::move(p));
        }
        blocks.push_back(std::move(block));
        window_start = window_end;
    }
    return from_blocks(d, blocks);
}

WitnessConfiguration witness_case2(std::size_t d, const std::vector<std::size_t>& deficiencies) {
    validate_composition(d, deficiencies);
    if (std::accumulate(deficiencies.begin(), deficiencies.end(), std::size_t{0}) < d + 1) {
        throw DomainError("sets E_v of the given sizes cannot cover all d + 1 vectors u_0..u_d");
    }
    std::vector<Vector> u(d + 1, Vector(d, Rational(0)));
    for (std::size_t i = 1; i <= d; ++i) {
        u[i][i - 1] = 1;
        u[0][i - 1] = -1;
    }
    std::vector<std::vector<Vector>> blocks;
    std::size_t cursor = 0;
    for (std::size_t e : deficiencies) {
        std::vector<bool> excluded(d + 1, false);
        for (std::size_t k = 0; k < e; ++k) {
            excluded[cursor] = true;
            cursor = (cursor + 1) % (d + 1);
        }
        std::vector<Vector> block;
        for (std::size_t j = 0; j <= d; ++j) {
            if (!excluded[j]) {
                block.push_back(u[j]);
            }
        }
        blocks.push_back(std::move(block));
    }
    return from_blocks(d, blocks);
}

}  // namespace sgp
