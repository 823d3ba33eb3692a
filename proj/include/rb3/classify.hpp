#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rb3/operators.hpp"

namespace rb3 {

inline constexpr std::uint64_t kDefaultSearchBudget = 2'000'000;

/// Finite-support search space: every assignment of values from `value_set` to
/// at most `max_support_size` indices of `index_range` (on top of the pinned
/// values), everything else zero.
struct SearchSpec {
    Window index_range;
    /// Number of nonzero values allowed beyond the pinned ones.
    std::size_t max_support_size = 1;
    std::vector<Rat> value_set;
    /// Fixed values; zero is allowed and means "known to vanish".
    std::map<Index, Rat> pinned;
    /// Upper bound on the number of complete candidates.
    std::uint64_t budget = kDefaultSearchBudget;
    bool use_pruning = true;
};

/// Number of complete candidates the spec describes (saturating).
std::uint64_t candidate_count(const SearchSpec& spec);

/// All assignments described by `spec` that satisfy the weight-zero identity on
/// all of Z, in a fixed traversal order. The zero operator is not reported.
/// Throws SearchSpaceTooLarge when candidate_count exceeds spec.budget.
std::vector<FiniteSupport> enumerate_rb_finite(const SearchSpec& spec);

/// Values known so far during a search. Indices in `unassigned` are unknown;
/// any other index missing from `values` is zero when `rest_zero` holds.
struct PartialAssignment {
    std::map<Index, Scalar> values;
    std::set<Index> unassigned;
    bool rest_zero = true;

    std::optional<Scalar> get(Index m) const;
};

struct Violation {
    std::string rule;
    std::vector<Index> indices;
    std::string detail;
};

struct PruneReport {
    std::vector<Violation> violations;
    bool violated() const { return !violations.empty(); }
};

struct PruneOptions {
    /// Also apply rules that only hold when the support is infinite.
    bool assume_infinite_support = false;
    /// Stop at the first violation.
    bool first_only = false;
};

/// Necessary conditions already violated by a partial assignment, with rule
/// parameters ranging over `w`. Every instance uses assigned values only.
PruneReport prune_necessary(const PartialAssignment& f, Window w, const PruneOptions& opts = {});

struct FamilyMatch {
    /// "R01".."R05", "support-in-{0,1}" (only f(1) nonzero), or "none".
    std::string label = "none";
    std::map<std::string, Scalar> params;
    /// Multiplying f by `scaling` gives the canonical family member.
    Scalar scaling = Scalar(1);
    std::string note;
};

/// Identifies the family of R from its values on `evidence`.
FamilyMatch recognize(const HomogeneousOperator& R, Window evidence);

/// The canonical operator described by a match; nullopt for "none".
std::optional<HomogeneousOperator> reconstruct(const FamilyMatch& match);

}  // namespace rb3
