#include "sgp/checker.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "sgp/combinatorics.hpp"
#include "sgp/errors.hpp"

namespace sgp {

ConditionOutcome check_condition(HullCache& cache, const Condition& condition) {
    const int actual = cache.intersection_dim(condition.family);
    return {actual == condition.expected.required_dim(), actual};
}

ConditionOutcome check_condition(const PointSet& points, const Condition& condition) {
    HullCache cache(points);
    return check_condition(cache, condition);
}

DefinitionCheck check_definition(HullCache& cache, std::size_t d, const SubsetFamily& family) {
    const int dd = static_cast<int>(d);
    int codim_sum = 0;
    for (IndexSet b : family.blocks()) {
        codim_sum += dd - static_cast<int>(cache.affine_dim(b));
    }
    DefinitionCheck out;
    out.actual_dim = cache.intersection_dim(family);
    out.expected_dim = dd - std::min(dd + 1, codim_sum);
    out.holds = out.actual_dim == out.expected_dim;
    return out;
}

namespace {

Verdict not_general_position(std::vector<std::size_t> witness) {
    Verdict v;
    v.status = Verdict::Status::NotGeneralPosition;
    v.witness = std::move(witness);
    return v;
}

Verdict violation(Condition condition, int actual_dim) {
    Verdict v;
    v.status = Verdict::Status::Violation;
    v.condition = std::move(condition);
    v.actual_dim = actual_dim;
    return v;
}

// Every subset, by increasing size, must satisfy dim aff F = min(d, |F| - 1).
// The first failure is a minimal dependent set.
std::optional<std::vector<std::size_t>> naive_general_position(const PointSet& points, HullCache& cache) {
    const std::size_t n = points.size();
    const std::size_t d = points.dim();
    std::optional<std::vector<std::size_t>> witness;
    for (std::size_t k = 1; k <= n && !witness; ++k) {
        for_each_combination(n, k, [&](const std::vector<std::size_t>& combo) {
            if (cache.affine_dim(IndexSet::from_indices(combo)) == std::min(d, k - 1)) {
                return true;
            }
            witness = combo;
            return false;
        });
    }
    return witness;
}

}  // namespace

Verdict check_sgp_naive(const PointSet& points, NaiveOptions options) {
    const std::size_t n = points.size();
    if (n > options.max_points) {
        throw OracleBoundError("exhaustive check over " + std::to_string(n) + " points exceeds the bound of " +
                               std::to_string(options.max_points));
    }
    HullCache cache(points);
    if (options.check_general_position) {
        if (auto witness = naive_general_position(points, cache)) {
            return not_general_position(std::move(*witness));
        }
    }
    std::optional<Verdict> found;
    for_each_naive_family(
        n,
        [&](const SubsetFamily& family) {
            DefinitionCheck check = check_definition(cache, points.dim(), family);
            if (check.holds) {
                return true;
            }
            found = violation(Condition{family, Clause::Naive, Expectation::dimension(check.expected_dim)},
                              check.actual_dim);
            return false;
        },
        options.max_points);
    return found ? std::move(*found) : Verdict{};
}

namespace {

constexpr std::size_t kChunk = 2048;

class ParallelConditionChecker {
public:
    ParallelConditionChecker(const PointSet& points, unsigned workers) {
        for (unsigned i = 0; i < workers; ++i) {
            caches_.emplace_back(points);
        }
    }

    // Index of the first violated condition in the batch, if any.
    std::optional<std::pair<std::size_t, int>> first_violation(const std::vector<Condition>& batch) {
        const std::size_t none = std::numeric_limits<std::size_t>::max();
        std::atomic<std::size_t> best{none};
        std::vector<int> dims(batch.size(), 0);
        auto work = [&](std::size_t worker) {
            HullCache& cache = caches_[worker];
            for (std::size_t i = worker; i < batch.size(); i += caches_.size()) {
                if (i > best.load(std::memory_order_relaxed)) {
                    return;
                }
                ConditionOutcome out = check_condition(cache, batch[i]);
                if (!out.satisfied) {
                    dims[i] = out.actual_dim;
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        };
        if (caches_.size() == 1) {
            work(0);
        } else {
            std::vector<std::jthread> threads;
            for (std::size_t w = 0; w < caches_.size(); ++w) {
                threads.emplace_back(work, w);
            }
        }
        const std::size_t idx = best.load();
        if (idx == none) {
            return std::nullopt;
        }
        return std::make_pair(idx, dims[idx]);
    }

private:
    std::vector<HullCache> caches_;
};

}  // namespace

Verdict check_sgp_reduced(const PointSet& points, ReducedOptions options) {
    GeneralPositionResult gp = is_general_position(points);
    if (!gp) {
        return not_general_position(std::move(gp.witness));
    }
    const std::size_t n = points.size();
    const std::size_t d = points.dim();
    if (n <= d + 1) {
        return Verdict{};
    }
    RecipeOptions recipe;
    recipe.include_clause_c = !(options.skip_clause_c_for_large_sets && n >= d * (d + 1));

    ParallelConditionChecker checker(points, std::max(1U, options.workers));
    std::vector<Condition> batch;
    batch.reserve(kChunk);
    std::optional<Verdict> found;
    auto flush = [&] {
        if (auto hit = checker.first_violation(batch)) {
            found = violation(batch[hit->first], hit->second);
        }
        batch.clear();
        return !found;
    };
    bool finished = for_each_recipe_condition(
        n, d,
        [&](const Condition& c) {
            batch.push_back(c);
            return batch.size() < kChunk || flush();
        },
        recipe);
    if (finished && !batch.empty()) {
        flush();
    }
    return found ? std::move(*found) : Verdict{};
}

std::vector<Violation> recipe_violations(const PointSet& points) {
    HullCache cache(points);
    std::vector<Violation> out;
    for_each_recipe_condition(points.size(), points.dim(), [&](const Condition& c) {
        ConditionOutcome outcome = check_condition(cache, c);
        if (!outcome.satisfied) {
            out.push_back({c, outcome.actual_dim});
        }
        return true;
    });
    return out;
}

}  // namespace sgp
