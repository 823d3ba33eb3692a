#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rb3/scalar.hpp"

namespace rb3 {

inline constexpr std::size_t kDefaultCounterexampleCap = 32;

struct Counterexample {
    std::vector<Index> tuple;
    Scalar lhs;
    Scalar rhs;
};

/// Outcome of an exhaustive identity check. `passed` holds exactly when no
/// violation was seen; `counterexamples` keeps the first `cap` of them.
class Report {
public:
    explicit Report(std::optional<std::size_t> cap = kDefaultCounterexampleCap) : cap_(cap) {}

    bool passed = true;
    std::uint64_t tuples_checked = 0;
    std::uint64_t violations = 0;
    std::vector<Counterexample> counterexamples;

    void count(std::uint64_t n = 1) { tuples_checked += n; }
    void fail(std::vector<Index> tuple, Scalar lhs, Scalar rhs);

    /// Checks lhs == rhs for one tuple and records a violation otherwise.
    void expect_equal(std::vector<Index> tuple, const Scalar& lhs, const Scalar& rhs) {
        if (!(lhs == rhs)) fail(std::move(tuple), lhs, rhs);
    }

    /// Appends `other` after this report's own findings.
    void merge(Report other);

    std::optional<std::size_t> cap() const { return cap_; }

private:
    std::optional<std::size_t> cap_;
};

struct CheckOptions {
    /// nullopt disables the cap.
    std::optional<std::size_t> max_counterexamples = kDefaultCounterexampleCap;
    /// Upper bound on worker threads used by a checker.
    unsigned workers = 1;
    /// Fundamental identity: enumerate every 5-tuple instead of the ordered reduction.
    bool strict = false;

    Report make_report() const { return Report(max_counterexamples); }
};

/// Several named reports produced by one suite run.
struct SuiteReport {
    std::vector<std::pair<std::string, Report>> parts;

    bool passed() const;
    const Report* find(const std::string& name) const;
    std::uint64_t tuples_checked() const;
};

}  // namespace rb3
