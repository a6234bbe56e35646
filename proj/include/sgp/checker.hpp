#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgp/enumeration.hpp"
#include "sgp/geometry.hpp"

namespace sgp {

struct ConditionOutcome {
    bool satisfied = true;
    int actual_dim = 0;
};

/// Compares the intersection dimension of the family's hulls with the
/// condition's requirement.
ConditionOutcome check_condition(const PointSet& points, const Condition& condition);
ConditionOutcome check_condition(HullCache& cache, const Condition& condition);

struct Verdict {
    enum class Status { InSGP, NotGeneralPosition, Violation };

    Status status = Status::InSGP;
    /// Minimal affinely dependent subset (0-based) for NotGeneralPosition.
    std::vector<std::size_t> witness;
    /// First violated condition in enumeration order, for Violation.
    std::optional<Condition> condition;
    int actual_dim = 0;

    bool in_sgp() const noexcept { return status == Status::InSGP; }
};

struct NaiveOptions {
    std::size_t max_points = kDefaultOracleBound;
    /// Run the "every small subset is independent" step before the
    /// family conditions. Disabling it exposes how the family conditions
    /// alone catch degenerate inputs.
    bool check_general_position = true;
};

/// Whether d - dim(cap aff F_v) = min(d + 1, sum(d - dim aff F_v)) holds for
/// the family, with every dimension computed from the points.
struct DefinitionCheck {
    bool holds = true;
    int expected_dim = 0;
    int actual_dim = 0;
};
DefinitionCheck check_definition(HullCache& cache, std::size_t d, const SubsetFamily& family);

/// Exhaustive check straight from the definition. Throws OracleBoundError when
/// the point set is larger than options.max_points.
Verdict check_sgp_naive(const PointSet& points, NaiveOptions options = {});

struct ReducedOptions {
    /// Threads used for condition checks; the reported violation is the first
    /// in enumeration order regardless.
    unsigned workers = 1;
    /// Skip the cover-all-points clause when n >= d(d + 1), where it has no
    /// families anyway.
    bool skip_clause_c_for_large_sets = true;
};

/// General position, then only the conditions of the reduced criterion.
Verdict check_sgp_reduced(const PointSet& points, ReducedOptions options = {});

struct Violation {
    Condition condition;
    int actual_dim = 0;
};

/// Every violated reduced-criterion condition, in enumeration order. Assumes
/// general position; the caller checks that separately.
std::vector<Violation> recipe_violations(const PointSet& points);

}  // namespace sgp
