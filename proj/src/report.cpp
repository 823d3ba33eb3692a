#include "rb3/report.hpp"

namespace rb3 {

void Report::fail(std::vector<Index> tuple, Scalar lhs, Scalar rhs) {
    passed = false;
    ++violations;
    if (!cap_ || counterexamples.size() < *cap_) {
        counterexamples.push_back({std::move(tuple), std::move(lhs), std::move(rhs)});
    }
}

void Report::merge(Report other) {
    passed = passed && other.passed;
    tuples_checked += other.tuples_checked;
    violations += other.violations;
    for (auto& cx : other.counterexamples) {
        if (cap_ && counterexamples.size() >= *cap_) break;
        counterexamples.push_back(std::move(cx));
    }
}

bool SuiteReport::passed() const {
    for (const auto& [name, r] : parts) {
        if (!r.passed) return false;
    }
    return true;
}

const Report* SuiteReport::find(const std::string& name) const {
    for (const auto& [n, r] : parts) {
        if (n == name) return &r;
    }
    return nullptr;
}

std::uint64_t SuiteReport::tuples_checked() const {
    std::uint64_t total = 0;
    for (const auto& [name, r] : parts) total += r.tuples_checked;
    return total;
}

}  // namespace rb3
