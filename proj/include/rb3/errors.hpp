#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rb3 {

using Index = std::int64_t;

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class ZeroDenominator : public std::domain_error {
public:
    ZeroDenominator() : std::domain_error("zero denominator") {}
};

class PoleAtPoint : public std::domain_error {
public:
    explicit PoleAtPoint(const std::string& point)
        : std::domain_error("rational function has a pole at a = " + point) {}
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a family value needs 1/(k*a - (k-1)) and that denominator is zero.
class DegenerateParameter : public std::domain_error {
public:
    DegenerateParameter(Index k, Index index)
        : std::domain_error("degenerate family parameter: k*a-(k-1) = 0 at k=" + std::to_string(k) +
                            " (basis index " + std::to_string(index) + ")"),
          k_(k), index_(index) {}

    Index k() const noexcept { return k_; }
    Index index() const noexcept { return index_; }

private:
    Index k_;
    Index index_;
};

class NotInvertibleOnWindow : public std::domain_error {
public:
    explicit NotInvertibleOnWindow(std::vector<Index> zeros)
        : std::domain_error(describe(zeros)), zeros_(std::move(zeros)) {}

    const std::vector<Index>& zeros() const noexcept { return zeros_; }

private:
    static std::string describe(const std::vector<Index>& zeros) {
        std::string s = "operator vanishes at index";
        for (Index m : zeros) s += " " + std::to_string(m);
        return s;
    }
    std::vector<Index> zeros_;
};

class ZeroScalar : public std::invalid_argument {
public:
    ZeroScalar() : std::invalid_argument("scaling factor must be nonzero") {}
};

class SearchSpaceTooLarge : public std::length_error {
public:
    SearchSpaceTooLarge(std::uint64_t candidates, std::uint64_t budget)
        : std::length_error("search space of " + std::to_string(candidates) +
                            " candidates exceeds budget " + std::to_string(budget)),
          candidates_(candidates) {}

    std::uint64_t candidates() const noexcept { return candidates_; }

private:
    std::uint64_t candidates_;
};

}  // namespace rb3
