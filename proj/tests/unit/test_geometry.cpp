#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "sgp/certificates.hpp"
#include "sgp/errors.hpp"
#include "sgp/generators.hpp"
#include "sgp/geometry.hpp"
#include "unit/oracles.hpp"
#include "unit/random_inputs.hpp"

using namespace sgp;

namespace {

SubsetFamily fam(std::vector<std::vector<std::size_t>> labels) {
    return SubsetFamily::from_labels(labels);
}

std::vector<std::vector<std::size_t>> zero_based(const SubsetFamily& f) {
    std::vector<std::vector<std::size_t>> out;
    for (IndexSet b : f.blocks()) {
        out.push_back(b.indices());
    }
    return out;
}

}  // namespace

TEST_CASE("point set validation", "[geometry]") {
    CHECK_THROWS_AS(PointSet(2, {}), DomainError);
    CHECK_THROWS_AS(PointSet(2, {{1, 2}, {1}}), DimensionError);
    CHECK_THROWS_AS(PointSet(0, {{}}), DimensionError);
}

TEST_CASE("affine_dim examples", "[geometry]") {
    PointSet line(2, {{0, 0}, {1, 0}, {2, 0}});
    CHECK(affine_dim(line, IndexSet{1}) == 0);
    CHECK(affine_dim(line, line.all()) == 1);
    PointSet curve = gen_moment_curve(3, {1, 2, 3, 4});
    CHECK(affine_dim(curve, curve.all()) == 3);
    CHECK_THROWS_AS(affine_dim(line, IndexSet{}), DomainError);
    CHECK_THROWS_AS(affine_dim(line, IndexSet{5}), DomainError);
}

TEST_CASE("hull_constraints examples", "[geometry]") {
    PointSet axis(2, {{0, 1}, {0, 2}});
    FlatConstraints f = hull_constraints(axis, axis.all());
    REQUIRE(f.codim() == 1);
    // A single equation c * x1 = 0 with c != 0.
    CHECK(f.normals(0, 1) == 0);
    CHECK(f.normals(0, 0) != 0);
    CHECK(f.rhs[0] == 0);
    CHECK(f.contains({0, 7}));
    CHECK_FALSE(f.contains({1, 7}));

    PointSet single(2, {{1, 0}});
    f = hull_constraints(single, single.all());
    CHECK(f.codim() == 2);
    CHECK(f.dim() == 0);
    CHECK(f.contains({1, 0}));
    CHECK_FALSE(f.contains({1, 1}));

    PointSet spanning(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(hull_constraints(spanning, spanning.all()).codim() == 0);
}

TEST_CASE("intersection_dim examples", "[geometry]") {
    PointSet axes(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    CHECK(intersection_dim(axes, fam({{1, 2}, {3, 4}})) == 0);
    PointSet parallel(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(intersection_dim(parallel, fam({{1, 2}, {3, 4}})) == -1);
    PointSet simplex(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(intersection_dim(simplex, fam({{1, 2, 3, 4}})) == 3);
    CHECK(intersection_dim(gen_hexagon_counterexample(), fam({{1, 4}, {2, 5}, {3, 6}})) == 0);
}

TEST_CASE("is_general_position examples", "[geometry]") {
    auto r = is_general_position(PointSet(2, {{0, 0}, {1, 0}, {2, 0}}));
    CHECK_FALSE(r);
    CHECK(r.witness == std::vector<std::size_t>{0, 1, 2});
    CHECK(is_general_position(gen_hexagon_counterexample()));
    CHECK(oracle::brute_general_position(gen_hexagon_counterexample()));
    CHECK(is_general_position(gen_moment_curve(2, {1, 2, 3, 4, 5})));

    // Repeated points: the witness is the minimal pair.
    r = is_general_position(PointSet(2, {{0, 0}, {5, 1}, {3, 3}, {5, 1}}));
    CHECK_FALSE(r);
    CHECK(r.witness == std::vector<std::size_t>{1, 3});
    // Small sets: independence of the whole set.
    CHECK(is_general_position(PointSet(3, {{0, 0, 0}, {1, 2, 3}})));
    CHECK_FALSE(is_general_position(PointSet(3, {{1, 2, 3}, {1, 2, 3}})));
    // Four collinear points in the plane: the first dependent triple.
    r = is_general_position(PointSet(2, {{9, 9}, {0, 0}, {1, 1}, {2, 2}, {7, 1}}));
    CHECK(r.witness == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("general position agrees with the determinant oracle", "[geometry][property]") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const std::size_t n = 1 + trial % 7;
        PointSet s = gen_random_rational(d, n, rng(), 1 + trial % 2);
        GeneralPositionResult gp = is_general_position(s);
        CHECK(static_cast<bool>(gp) == oracle::brute_general_position(s));
        if (!gp) {
            // The witness is dependent and minimal.
            IndexSet w = IndexSet::from_indices(gp.witness);
            CHECK(gp.witness.size() <= d + 1);
            CHECK_FALSE(affinely_independent(s, w));
            for (std::size_t i : gp.witness) {
                CHECK(affinely_independent(s, IndexSet(w.mask() & ~(std::uint64_t{1} << i))));
            }
        } else {
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                IndexSet f(mask);
                if (f.size() <= d + 1) {
                    CHECK(affine_dim(s, f) == f.size() - 1);
                }
            }
        }
        if (n <= d + 1) {
            std::vector<std::size_t> all(n);
            std::iota(all.begin(), all.end(), std::size_t{0});
            CHECK(static_cast<bool>(gp) == (rank(bordered_matrix(s, all)) == n));
        }
    }
}

TEST_CASE("intersection dimension properties", "[geometry][property]") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const std::size_t n = 2 + trial % 7;
        PointSet s = gen_random_rational(d, n, rng(), 1 + trial % 3);
        SubsetFamily f = testing_support::random_family(rng, n, 1 + trial % 4);
        const int dim = intersection_dim(s, f);

        // Independent parametric computation.
        CHECK(dim == oracle::parametric_intersection_dim(s, zero_based(f)));

        // Either at least the generic dimension or empty.
        int codims = 0;
        for (IndexSet b : f.blocks()) {
            codims += static_cast<int>(d) - static_cast<int>(affine_dim(s, b));
        }
        CHECK((dim == -1 || dim >= static_cast<int>(d) - codims));

        // Block order does not matter.
        HullCache cache(s);
        std::vector<const FlatConstraints*> flats;
        for (IndexSet b : f.blocks()) {
            flats.push_back(&cache.constraints(b));
        }
        std::reverse(flats.begin(), flats.end());
        CHECK(intersection_dim(flats, d) == dim);

        // Affine images preserve everything.
        PointSet image = testing_support::random_affine_image(rng, s);
        CHECK(intersection_dim(image, f) == dim);
        CHECK(affine_dim(image, f.blocks().front()) == affine_dim(s, f.blocks().front()));
        CHECK(static_cast<bool>(is_general_position(image)) == static_cast<bool>(is_general_position(s)));
    }
}
