#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sgp/checker.hpp"
#include "sgp/errors.hpp"
#include "sgp/generators.hpp"
#include "unit/random_inputs.hpp"

using namespace sgp;

namespace {

using Labels = std::vector<std::vector<std::size_t>>;

const PointSet kSquare(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
const PointSet kKite(2, {{0, 0}, {1, 0}, {0, 1}, {2, 3}});

Condition clause_a(Labels labels) {
    return {SubsetFamily::from_labels(labels), Clause::A, Expectation::singleton()};
}

// Mixes integer lattices (many degeneracies) with finer grids.
PointSet random_input(std::uint64_t seed, std::size_t d, std::size_t n) {
    return gen_random_rational(d, n, seed, 1 + seed % 4);
}

bool is_minimal_dependent(const PointSet& points, const std::vector<std::size_t>& witness) {
    const IndexSet all = IndexSet::from_indices(witness);
    if (witness.empty() || affinely_independent(points, all)) {
        return false;
    }
    for (std::size_t i : witness) {
        if (!affinely_independent(points, IndexSet(all.mask() & ~(std::uint64_t{1} << i)))) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("check_condition examples", "[checker]") {
    auto outcome = check_condition(kSquare, clause_a({{1, 2}, {3, 4}}));
    CHECK_FALSE(outcome.satisfied);
    CHECK(outcome.actual_dim == -1);

    outcome = check_condition(kKite, clause_a({{1, 2}, {3, 4}}));
    CHECK(outcome.satisfied);
    CHECK(outcome.actual_dim == 0);

    const PointSet hexagon = gen_hexagon_counterexample();
    outcome = check_condition(hexagon, {SubsetFamily::from_labels({{1, 4}, {2, 5}, {3, 6}}), Clause::B,
                                        Expectation::empty()});
    CHECK_FALSE(outcome.satisfied);
    CHECK(outcome.actual_dim == 0);

    outcome = check_condition(kSquare, {SubsetFamily::from_labels({{1, 2}}), Clause::Naive, Expectation::dimension(1)});
    CHECK(outcome.satisfied);
    CHECK(Expectation::dimension(-1) == Expectation::empty());
    CHECK(Expectation::dimension(0) == Expectation::singleton());
}

TEST_CASE("naive checker examples", "[checker]") {
    Verdict v = check_sgp_naive(kSquare);
    REQUIRE(v.status == Verdict::Status::Violation);
    CHECK(v.condition->family.labels() == Labels{{1, 2}, {3, 4}});
    CHECK(v.actual_dim == -1);
    CHECK(v.condition->expected == Expectation::singleton());

    CHECK(check_sgp_naive(kKite).in_sgp());
    CHECK(check_sgp_naive(PointSet(2, {{0, 0}, {1, 0}, {0, 1}})).in_sgp());

    v = check_sgp_naive(PointSet(2, {{0, 0}, {1, 1}, {2, 2}, {0, 1}}));
    REQUIRE(v.status == Verdict::Status::NotGeneralPosition);
    CHECK(v.witness == std::vector<std::size_t>{0, 1, 2});

    CHECK_THROWS_AS(check_sgp_naive(gen_random_rational(2, 10, 1, 5)), OracleBoundError);
    CHECK_NOTHROW(check_sgp_naive(gen_moment_curve(1, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), {.max_points = 10}));
}

TEST_CASE("reduced checker examples", "[checker]") {
    Verdict v = check_sgp_reduced(kSquare);
    REQUIRE(v.status == Verdict::Status::Violation);
    CHECK(v.condition->clause == Clause::A);
    CHECK(v.condition->family.labels() == Labels{{1, 2}, {3, 4}});
    CHECK(v.actual_dim == -1);

    CHECK(check_sgp_reduced(kKite).in_sgp());

    // Every affine hexagon has parallel edge/diagonal pairs, and clause A comes
    // first in the enumeration order.
    const PointSet hexagon = gen_hexagon_counterexample();
    v = check_sgp_reduced(hexagon);
    REQUIRE(v.status == Verdict::Status::Violation);
    CHECK(v.condition->clause == Clause::A);
    CHECK(v.condition->family.labels() == Labels{{1, 2}, {4, 5}});
    CHECK(v.actual_dim == -1);

    const PointSet curve = gen_moment_curve(2, {1, 2, 3, 4, 5});
    CHECK(check_sgp_reduced(curve).status == check_sgp_naive(curve).status);

    // At most d + 1 points: plain general position.
    CHECK(check_sgp_reduced(PointSet(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).in_sgp());
    v = check_sgp_reduced(PointSet(3, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}));
    REQUIRE(v.status == Verdict::Status::NotGeneralPosition);
    CHECK(v.witness == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("hexagon violations", "[checker]") {
    const PointSet hexagon = gen_hexagon_counterexample();
    std::set<Labels> clause_b;
    std::size_t clause_a_count = 0;
    for (const Violation& v : recipe_violations(hexagon)) {
        if (v.condition.clause == Clause::B) {
            clause_b.insert(v.condition.family.labels());
            CHECK(v.actual_dim == 0);
        } else {
            CHECK(v.condition.clause == Clause::A);
            CHECK(v.actual_dim == -1);
            ++clause_a_count;
        }
    }
    CHECK(clause_b == std::set<Labels>{{{1, 4}, {2, 5}, {3, 6}}});
    CHECK(clause_a_count > 0);
}

TEST_CASE("reduced and naive checkers agree", "[checker][property]") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t d = 2 + seed % 2;
        const std::size_t n = d + 2 + (seed / 2) % (d == 2 ? 4 : 3);
        const PointSet points = random_input(seed, d, n);
        INFO("seed=" << seed << " d=" << d << " n=" << n);
        const Verdict reduced = check_sgp_reduced(points);
        const Verdict naive = check_sgp_naive(points);
        CHECK(reduced.status == naive.status);
        // The two checkers look for dependent subsets in different orders, so
        // only minimality of each witness is compared.
        for (const Verdict* v : {&reduced, &naive}) {
            if (v->status == Verdict::Status::NotGeneralPosition) {
                CHECK(is_minimal_dependent(points, v->witness));
            }
        }
    }
}

TEST_CASE("naive equality agrees with the closed-form dimension", "[checker][property]") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 100; checked < 12; ++seed) {
        const std::size_t d = 2 + seed % 2;
        const PointSet points = gen_random_rational(d, d + 3, seed, 1 + seed % 3);
        if (!is_general_position(points)) {
            continue;
        }
        ++checked;
        HullCache cache(points);
        for_each_naive_family(points.size(), [&](const SubsetFamily& f) {
            long small_blocks = 0;
            long small_total = 0;
            for (IndexSet b : f.blocks()) {
                if (b.size() <= d) {
                    ++small_blocks;
                    small_total += static_cast<long>(b.size());
                }
            }
            const long t = (static_cast<long>(d) + 1) * (small_blocks - 1) + 1;
            const int closed_form = static_cast<int>(std::max(-1L, small_total - t));
            const DefinitionCheck def = check_definition(cache, d, f);
            CHECK(def.holds == (cache.intersection_dim(f) == closed_form));
            return true;
        });
    }
}

TEST_CASE("family conditions alone catch degenerate sets", "[checker][property]") {
    std::size_t degenerate = 0;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const std::size_t d = 2 + seed % 2;
        const PointSet points = gen_random_rational(d, d + 1 + seed % 4, seed, 1);
        if (is_general_position(points)) {
            continue;
        }
        ++degenerate;
        INFO("seed=" << seed);
        CHECK(check_sgp_naive(points, {.check_general_position = false}).status == Verdict::Status::Violation);
    }
    CHECK(degenerate > 20);
}

TEST_CASE("verdict status is invariant under relabeling and affine maps", "[checker][property]") {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t d = 2 + seed % 2;
        const PointSet points = random_input(seed + 500, d, d + 3);
        std::vector<std::size_t> perm(points.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto status = check_sgp_reduced(points).status;
        CHECK(check_sgp_reduced(testing_support::permuted(points, perm)).status == status);
        CHECK(check_sgp_reduced(testing_support::random_affine_image(rng, points)).status == status);
    }
}

TEST_CASE("worker count does not change the reported violation", "[checker][concurrency]") {
    std::vector<PointSet> inputs{gen_hexagon_counterexample(), kSquare};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        inputs.push_back(gen_random_rational(2, 9, seed, 2));
        inputs.push_back(gen_random_rational(3, 8, seed, 2));
    }
    for (const PointSet& points : inputs) {
        const Verdict one = check_sgp_reduced(points, {.workers = 1});
        for (unsigned workers : {2U, 4U, 7U}) {
            const Verdict many = check_sgp_reduced(points, {.workers = workers});
            CHECK(many.status == one.status);
            CHECK(many.witness == one.witness);
            CHECK(many.condition == one.condition);
            CHECK(many.actual_dim == one.actual_dim);
        }
    }
}
