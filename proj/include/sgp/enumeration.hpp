#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "sgp/family.hpp"

namespace sgp {

/// Which clause of the reduced criterion produced a condition; Naive marks
/// conditions taken straight from the definition.
enum class Clause { A, B, C, Naive };

std::string_view to_string(Clause clause);

/// Required outcome for the intersection of the affine hulls of a family.
struct Expectation {
    enum class Kind { Singleton, Empty, Dim };
    Kind kind = Kind::Singleton;

    static Expectation singleton() { return {Kind::Singleton}; }
    static Expectation empty() { return {Kind::Empty}; }
    /// -1 maps to Empty and 0 to Singleton so that equal requirements compare equal.
    static Expectation dimension(int k);

    int required_dim() const noexcept { return kind == Kind::Singleton ? 0 : kind == Kind::Empty ? -1 : dim; }

    friend bool operator==(const Expectation&, const Expectation&) = default;

    int dim = 0;
};

struct Condition {
    SubsetFamily family;
    Clause clause = Clause::A;
    Expectation expected;

    friend bool operator==(const Condition&, const Condition&) = default;
};

/// Whether the "cover all points" clause can contribute families for r blocks:
/// d >= 4, 3 <= r <= floor((d+2)/2) and T(d,r) - floor(d/(r-1)) <= n <= T(d,r) - 2.
bool clause_c_applicable(std::size_t d, std::size_t r, std::size_t n);

struct RecipeOptions {
    bool include_clause_c = true;
};

/// Visits every condition of the reduced criterion on n labelled points in
/// R^d exactly once: clause A (sum of deficiencies = d), clause B (= d + 1,
/// r >= 3), clause C (family covers all n points, sum >= d + 2 and
/// sum - min <= d). Order: clause, then r, then block masks lexicographically.
/// Nothing is visited when n <= d + 1. The visitor returns false to stop;
/// the function returns false iff stopped early.
bool for_each_recipe_condition(std::size_t n, std::size_t d, const std::function<bool(const Condition&)>& visit,
                               RecipeOptions options = {});

std::vector<Condition> enumerate_recipe_conditions(std::size_t n, std::size_t d, RecipeOptions options = {});

inline constexpr std::size_t kDefaultOracleBound = 9;

/// Visits every unordered collection of pairwise disjoint nonempty subsets of
/// n points, r = 1..n, ordered by r then block masks. Throws
/// OracleBoundError when n > max_points.
bool for_each_naive_family(std::size_t n, const std::function<bool(const SubsetFamily&)>& visit,
                           std::size_t max_points = kDefaultOracleBound);

std::vector<SubsetFamily> enumerate_naive_conditions(std::size_t n, std::size_t max_points = kDefaultOracleBound);

struct ConditionCounts {
    std::optional<std::size_t> naive;
    std::size_t clause_a = 0;
    std::size_t clause_b = 0;
    std::size_t clause_c = 0;

    std::size_t reduced_total() const noexcept { return clause_a + clause_b + clause_c; }
};

/// Counts both streams by walking them. The naive stream is only walked when
/// include_naive is set (subject to max_points).
ConditionCounts count_conditions(std::size_t n, std::size_t d, bool include_naive = true,
                                 std::size_t max_points = kDefaultOracleBound);

}  // namespace sgp
