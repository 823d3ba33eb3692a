#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "rb3/report.hpp"

namespace rb3 {

/// Splits the inclusive range [lo, hi] into contiguous chunks, runs
/// `body(chunk_lo, chunk_hi, report)` on each, and merges the chunk reports in
/// range order. The result is identical for any worker count. If chunks throw,
/// the exception of the lowest chunk is rethrown.
template <class Body>
Report run_partitioned(Index lo, Index hi, const CheckOptions& opts, Body&& body) {
    Report total = opts.make_report();
    if (hi < lo) return total;
    const Index span = hi - lo + 1;
    const Index chunks = std::clamp<Index>(static_cast<Index>(opts.workers), 1, span);
    if (chunks == 1) {
        body(lo, hi, total);
        return total;
    }

    std::vector<Report> parts(static_cast<std::size_t>(chunks), opts.make_report());
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(chunks));
        for (Index c = 0; c < chunks; ++c) {
            const Index a = lo + span * c / chunks;
            const Index b = lo + span * (c + 1) / chunks - 1;
            pool.emplace_back([&, a, b, c] {
                try {
                    body(a, b, parts[static_cast<std::size_t>(c)]);
                } catch (...) {
                    errors[static_cast<std::size_t>(c)] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    for (auto& p : parts) total.merge(std::move(p));
    return total;
}

}  // namespace rb3
