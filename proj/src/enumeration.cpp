#include "sgp/enumeration.hpp"

#include <algorithm>
#include <string>

#include "sgp/errors.hpp"

namespace sgp {

std::string_view to_string(Clause clause) {
    switch (clause) {
        case Clause::A: return "A";
        case Clause::B: return "B";
        case Clause::C: return "C";
        case Clause::Naive: return "naive";
    }
    return "?";
}

Expectation Expectation::dimension(int k) {
    if (k < 0) {
        return empty();
    }
    if (k == 0) {
        return singleton();
    }
    Expectation e{Kind::Dim};
    e.dim = k;
    return e;
}

bool clause_c_applicable(std::size_t d, std::size_t r, std::size_t n) {
    if (d < 4 || r < 3 || r > (d + 2) / 2) {
        return false;
    }
    const std::size_t t = tverberg_number(d, r);
    return t - d / (r - 1) <= n && n + 2 <= t;
}

namespace {

std::uint64_t bits_above(std::size_t i) {
    return i >= 63 ? 0 : ~((std::uint64_t{2} << i) - 1);
}

// Depth-first walk over canonical families of exactly r blocks drawn from
// the first n points. Blocks are chosen in increasing mask order at every
// level, which yields the families in lexicographic order of their mask
// tuples. `max_block` bounds block sizes; `total` (if set) fixes m.
class FamilyWalker {
public:
    FamilyWalker(std::size_t n, std::size_t r, std::size_t max_block, std::optional<std::size_t> total,
                 const std::function<bool(const std::vector<IndexSet>&)>& leaf)
        : universe_(IndexSet::first(n).mask()), r_(r), max_block_(max_block), total_(total), leaf_(leaf) {
        blocks_.reserve(r);
    }

    bool run() { return r_ == 0 || step(universe_, 0, 0); }

private:
    bool step(std::uint64_t candidates, std::uint64_t used, std::size_t used_count) {
        const std::size_t level = blocks_.size();
        const std::size_t blocks_after = r_ - level - 1;
        for (std::uint64_t s = (0 - candidates) & candidates; s != 0; s = (s - candidates) & candidates) {
            const std::size_t size = static_cast<std::size_t>(std::popcount(s));
            if (size > max_block_) {
                continue;
            }
            const std::size_t now = used_count + size;
            if (total_) {
                if (now + blocks_after > *total_ || now + blocks_after * max_block_ < *total_) {
                    continue;
                }
            }
            const std::size_t lo = static_cast<std::size_t>(std::countr_zero(s));
            const std::uint64_t next = universe_ & ~(used | s) & bits_above(lo);
            if (static_cast<std::size_t>(std::popcount(next)) < blocks_after) {
                continue;
            }
            blocks_.push_back(IndexSet(s));
            bool go_on = blocks_after == 0 ? (!total_ || now == *total_ ? leaf_(blocks_) : true)
                                           : step(next, used | s, now);
            blocks_.pop_back();
            if (!go_on) {
                return false;
            }
        }
        return true;
    }

    std::uint64_t universe_;
    std::size_t r_;
    std::size_t max_block_;
    std::optional<std::size_t> total_;
    const std::function<bool(const std::vector<IndexSet>&)>& leaf_;
    std::vector<IndexSet> blocks_;
};

}  // namespace

bool for_each_recipe_condition(std::size_t n, std::size_t d, const std::function<bool(const Condition&)>& visit,
                               RecipeOptions options) {
    if (n <= d + 1) {
        return true;
    }
    if (n > kMaxIndexedPoints) {
        throw DomainError("condition enumeration supports at most 64 points");
    }
    Condition cond;
    auto emit = [&](Clause clause, Expectation expected) {
        return [&, clause, expected](const std::vector<IndexSet>& blocks) {
            cond.family = SubsetFamily(blocks);
            cond.clause = clause;
            cond.expected = expected;
            return visit(cond);
        };
    };

    // A: m = T(d, r), 2 <= r <= min(d, floor((n + d) / (d + 1)))
    const std::size_t a_hi = std::min(d, (n + d) / (d + 1));
    for (std::size_t r = 2; r <= a_hi; ++r) {
        std::function<bool(const std::vector<IndexSet>&)> leaf = emit(Clause::A, Expectation::singleton());
        if (!FamilyWalker(n, r, d, tverberg_number(d, r), leaf).run()) {
            return false;
        }
    }
    // B: m = T(d, r) - 1, 3 <= r <= min(d + 1, floor((n + d + 1) / (d + 1)))
    const std::size_t b_hi = std::min(d + 1, (n + d + 1) / (d + 1));
    for (std::size_t r = 3; r <= b_hi; ++r) {
        std::function<bool(const std::vector<IndexSet>&)> leaf = emit(Clause::B, Expectation::empty());
        if (!FamilyWalker(n, r, d, tverberg_number(d, r) - 1, leaf).run()) {
            return false;
        }
    }
    if (!options.include_clause_c) {
        return true;
    }
    // C: the family covers all n points, sum(eps) >= d + 2 and sum(eps) - min(eps) <= d.
    for (std::size_t r = 2; r <= d + 1; ++r) {
        if (r * (d + 1) < n + d + 2 || n < r) {
            continue;
        }
        const long eps_sum = static_cast<long>(r * (d + 1)) - static_cast<long>(n);
        auto inner = emit(Clause::C, Expectation::empty());
        std::function<bool(const std::vector<IndexSet>&)> leaf = [&, inner](const std::vector<IndexSet>& blocks) {
            std::size_t largest = 0;
            for (IndexSet b : blocks) {
                largest = std::max(largest, b.size());
            }
            const long eps_min = static_cast<long>(d + 1 - largest);
            if (eps_sum - eps_min > static_cast<long>(d)) {
                return true;
            }
            return inner(blocks);
        };
        if (!FamilyWalker(n, r, d, n, leaf).run()) {
            return false;
        }
    }
    return true;
}

std::vector<Condition> enumerate_recipe_conditions(std::size_t n, std::size_t d, RecipeOptions options) {
    std::vector<Condition> out;
    for_each_recipe_condition(
        n, d,
        [&](const Condition& c) {
            out.push_back(c);
            return true;
        },
        options);
    return out;
}

bool for_each_naive_family(std::size_t n, const std::function<bool(const SubsetFamily&)>& visit,
                           std::size_t max_points) {
    if (n > max_points) {
        throw OracleBoundError("exhaustive enumeration over " + std::to_string(n) + " points exceeds the bound of " +
                               std::to_string(max_points));
    }
    if (n > kMaxIndexedPoints) {
        throw DomainError("condition enumeration supports at most 64 points");
    }
    SubsetFamily family;
    std::function<bool(const std::vector<IndexSet>&)> leaf = [&](const std::vector<IndexSet>& blocks) {
        family = SubsetFamily(blocks);
        return visit(family);
    };
    for (std::size_t r = 1; r <= n; ++r) {
        if (!FamilyWalker(n, r, n, std::nullopt, leaf).run()) {
            return false;
        }
    }
    return true;
}

std::vector<SubsetFamily> enumerate_naive_conditions(std::size_t n, std::size_t max_points) {
    std::vector<SubsetFamily> out;
    for_each_naive_family(
        n,
        [&](const SubsetFamily& f) {
            out.push_back(f);
            return true;
        },
        max_points);
    return out;
}

ConditionCounts count_conditions(std::size_t n, std::size_t d, bool include_naive, std::size_t max_points) {
    ConditionCounts counts;
    for_each_recipe_condition(n, d, [&](const Condition& c) {
        switch (c.clause) {
            case Clause::A: ++counts.clause_a; break;
            case Clause::B: ++counts.clause_b; break;
            case Clause::C: ++counts.clause_c; break;
            case Clause::Naive: break;
        }
        return true;
    });
    if (include_naive) {
        std::size_t naive = 0;
        for_each_naive_family(
            n,
            [&](const SubsetFamily&) {
                ++naive;
                return true;
            },
            max_points);
        counts.naive = naive;
    }
    return counts;
}

}  // namespace sgp
